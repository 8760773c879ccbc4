#include "lietk/admissible.hpp"

#include "lietk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace lietk {

namespace {

struct TripleSolution {
    Sl2Triple triple;
    // Images [x, k] of the homogeneous solutions k; all zero iff h is unique for this x.
    std::vector<Element> kernel_images;
};

std::optional<TripleSolution> solve_triple(const WeightDecomposition& d, const Weight& alpha,
                                           const Element& x)
{
    const LieAlgebra& algebra = d.algebra();
    const ToralSubalgebra& toral = d.toral();
    const Subspace partner_space = d.space(-alpha);
    if (partner_space.is_zero() || is_zero(x)) {
        return std::nullopt;
    }
    const auto partners = partner_space.basis_vectors();
    const std::size_t m = partners.size();
    std::vector<Element> images;
    for (const auto& v : partners) {
        images.push_back(algebra.bracket(x, v));
    }
    // [x, y] in h: every functional vanishing on h vanishes on [x, y].
    const Subspace annihilator_h = annihilator(toral.space());
    // alpha([x, y]) = alpha . (projector [x, y]) = 2
    const Vector alpha_row = toral.basis_coordinates().projector().transpose().apply(alpha.coords);
    Matrix system(annihilator_h.dim() + 1, m);
    Vector rhs = zero_vector(annihilator_h.dim() + 1);
    for (std::size_t r = 0; r < annihilator_h.dim(); ++r) {
        const Vector a = annihilator_h.basis_vector(r);
        for (std::size_t j = 0; j < m; ++j) {
            system(r, j) = dot(a, images[j]);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        system(annihilator_h.dim(), j) = dot(alpha_row, images[j]);
    }
    rhs.back() = 2;
    auto solution = solve_affine(system, rhs);
    if (!solution) {
        return std::nullopt;
    }
    auto combine = [&](const Vector& c) {
        Element y = algebra.zero();
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(c[j]) != 0) {
                y += c[j] * partners[j];
            }
        }
        return y;
    };
    Element y = combine(solution->particular);
    Element h = algebra.bracket(x, y);
    if (!toral.space().contains(h) || d.evaluate(alpha, h) != 2 ||
        algebra.bracket(h, x) != Rational(2) * x || algebra.bracket(h, y) != Rational(-2) * y) {
        throw InvariantViolation("sl2 relations fail for the solved triple through " + to_string(x));
    }
    TripleSolution out{{x, std::move(h), std::move(y), alpha}, {}};
    for (std::size_t b = 0; b < solution->kernel.dim(); ++b) {
        out.kernel_images.push_back(algebra.bracket(x, combine(solution->kernel.basis_vector(b))));
    }
    return out;
}

Element random_combination(const Subspace& s, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    while (true) {
        Element v = zero_vector(s.ambient_dim());
        bool nonzero = false;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const int c = coeff(rng);
            if (c != 0) {
                v += Rational(c) * s.basis_vector(i);
                nonzero = true;
            }
        }
        if (nonzero) {
            return v;
        }
    }
}

// Basis vectors of L_alpha followed by `samples` random combinations.
std::vector<Element> probe_vectors(const Subspace& s, std::size_t samples, std::mt19937_64& rng)
{
    auto out = s.basis_vectors();
    for (std::size_t i = 0; i < samples; ++i) {
        out.push_back(random_combination(s, rng));
    }
    return out;
}

Subspace bracket_pair_span(const RootDatum& rd, const std::vector<Weight>& delta)
{
    const auto& d = rd.decomposition();
    Subspace out = Subspace::zero(rd.algebra().dim());
    for (const auto& a : delta) {
        out = out + bracket_span(rd.algebra(), d.space(a), d.space(-a));
    }
    return out;
}

Subspace root_space_sum(const RootDatum& rd, const std::vector<Weight>& delta)
{
    Subspace out = Subspace::zero(rd.algebra().dim());
    for (const auto& a : delta) {
        out = out + rd.decomposition().space(a);
    }
    return out;
}

void require_semisimple(const RootDatum& rd, const char* op)
{
    if (!is_semisimple(rd.algebra())) {
        throw PreconditionError(std::string(op) + ": algebra is not semisimple");
    }
}

bool contains_weight(const std::vector<Weight>& set, const Weight& w)
{
    return std::find(set.begin(), set.end(), w) != set.end();
}

std::vector<Weight> sorted_unique(std::vector<Weight> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::optional<Sl2Triple> find_sl2_triple(const WeightDecomposition& d, const Weight& alpha,
                                         const Element& x)
{
    if (alpha.is_zero() || !d.is_root(alpha)) {
        throw PreconditionError("find_sl2_triple: " + to_string(alpha) + " is not a root");
    }
    if (is_zero(x) || !d.space(alpha).contains(x)) {
        throw PreconditionError("find_sl2_triple: x is not a nonzero vector of the root space");
    }
    auto solved = solve_triple(d, alpha, x);
    if (!solved) {
        return std::nullopt;
    }
    return std::move(solved->triple);
}

// ---------------------------------------------------------------------------
// RootDatum

RootDatum::RootDatum(WeightDecomposition decomposition, std::map<Weight, Sl2Triple> triples,
                     std::map<Weight, bool> integrable)
    : decomposition_(std::move(decomposition)), triples_(std::move(triples)),
      integrable_(std::move(integrable))
{
    for (const auto& alpha : decomposition_.roots()) {
        auto it = triples_.find(alpha);
        if (it == triples_.end()) {
            throw PreconditionError("root datum is missing a triple for " + to_string(alpha));
        }
        auto coords = decomposition_.toral().coordinates(it->second.h);
        if (!coords) {
            throw InvariantViolation("splitting element outside the toral subalgebra");
        }
        splitting_coords_.emplace(alpha, std::move(*coords));
    }
}

const Sl2Triple& RootDatum::triple(const Weight& alpha) const
{
    auto it = triples_.find(alpha);
    if (it == triples_.end()) {
        throw PreconditionError(to_string(alpha) + " is not a root");
    }
    return it->second;
}

const Vector& RootDatum::splitting_coords(const Weight& alpha) const
{
    auto it = splitting_coords_.find(alpha);
    if (it == splitting_coords_.end()) {
        throw PreconditionError(to_string(alpha) + " is not a root");
    }
    return it->second;
}

bool RootDatum::integrable(const Weight& alpha) const
{
    auto it = integrable_.find(alpha);
    return it != integrable_.end() && it->second;
}

bool RootDatum::all_integrable() const
{
    return std::all_of(roots().begin(), roots().end(), [this](const Weight& a) { return integrable(a); });
}

Rational RootDatum::pairing(const Weight& beta, const Weight& alpha) const
{
    return beta(splitting_coords(alpha));
}

Weight RootDatum::reflect(const Weight& alpha, const Weight& beta) const
{
    return beta - pairing(beta, alpha) * alpha;
}

// ---------------------------------------------------------------------------
// Admissibility

std::string to_string(AdmissibilityClause clause)
{
    switch (clause) {
    case AdmissibilityClause::empty_root_set:
        return "empty-root-set";
    case AdmissibilityClause::toral_not_in_brackets:
        return "toral-not-in-bracket-span";
    case AdmissibilityClause::no_sl2_triple:
        return "no-sl2-triple";
    }
    return "?";
}

AdmissibilityResult is_admissible(const WeightDecomposition& d, SamplingOptions sampling)
{
    const LieAlgebra& algebra = d.algebra();
    const auto& roots = d.roots();
    if (roots.empty()) {
        return AdmissibilityFailure{AdmissibilityClause::empty_root_set, std::nullopt, std::nullopt,
                                    "the toral subalgebra has no nonzero weights"};
    }

    Subspace brackets = Subspace::zero(algebra.dim());
    for (const auto& a : roots) {
        brackets = brackets + bracket_span(algebra, d.space(a), d.space(-a));
    }
    const Subspace& h = d.toral().space();
    if (!brackets.contains(h)) {
        // Direction of h orthogonal to the part of h that is reached.
        const Subspace missing = intersect(h, annihilator(intersect(h, brackets)));
        return AdmissibilityFailure{AdmissibilityClause::toral_not_in_brackets, std::nullopt,
                                    missing.basis_vector(0),
                                    "toral subalgebra (dim " + std::to_string(h.dim()) +
                                        ") is not inside the bracket span of opposite root spaces"};
    }

    std::mt19937_64 rng(sampling.seed);
    std::map<Weight, Sl2Triple> triples;
    std::map<Weight, bool> integrable;
    for (const auto& alpha : roots) {
        const auto probes = probe_vectors(d.space(alpha), sampling.samples, rng);
        for (std::size_t p = 0; p < probes.size(); ++p) {
            auto solved = solve_triple(d, alpha, probes[p]);
            if (!solved) {
                return AdmissibilityFailure{AdmissibilityClause::no_sl2_triple, alpha, probes[p],
                                            "no partner in the opposite root space"};
            }
            if (p == 0) {
                const auto& t = solved->triple;
                integrable[alpha] = is_ad_nilpotent(algebra, t.e) && is_ad_nilpotent(algebra, t.f);
                triples.emplace(alpha, std::move(solved->triple));
            }
        }
    }
    return RootDatum(d, std::move(triples), std::move(integrable));
}

// ---------------------------------------------------------------------------
// Property checks

CheckResult splitting_elements_unique(const RootDatum& rd, SamplingOptions sampling)
{
    const auto& d = rd.decomposition();
    std::mt19937_64 rng(sampling.seed);
    for (const auto& alpha : rd.roots()) {
        for (const auto& x : probe_vectors(d.space(alpha), sampling.samples, rng)) {
            auto solved = solve_triple(d, alpha, x);
            if (!solved) {
                return Counterexample{"splitting-unique", {alpha}, {x}, "no triple through this vector"};
            }
            for (const auto& k : solved->kernel_images) {
                if (!is_zero(k)) {
                    return Counterexample{"splitting-unique", {alpha}, {x, k},
                                          "partner choice changes h by a nonzero element"};
                }
            }
            if (solved->triple.h != rd.splitting_element(alpha)) {
                return Counterexample{"splitting-unique",
                                      {alpha},
                                      {solved->triple.h, rd.splitting_element(alpha)},
                                      "two different splitting elements"};
            }
        }
    }

    const auto& roots = rd.roots();
    const std::size_t rank_dim = rd.toral().dim();
    auto h_span = [&](const std::vector<Weight>& ws) {
        std::vector<Vector> vs;
        for (const auto& w : ws) {
            vs.push_back(rd.splitting_coords(w));
        }
        return Subspace::span(rank_dim, vs);
    };
    auto weight_span = [&](const std::vector<Weight>& ws) {
        std::vector<Vector> vs;
        for (const auto& w : ws) {
            vs.push_back(w.coords);
        }
        return Subspace::span(rank_dim, vs);
    };
    // Spanning set of roots, greedily.
    std::vector<Weight> basis;
    for (const auto& a : roots) {
        auto extended = basis;
        extended.push_back(a);
        if (weight_span(extended).dim() > basis.size()) {
            basis = std::move(extended);
        }
    }
    const Subspace all_h = h_span(basis);
    for (const auto& a : roots) {
        if (!all_h.contains(rd.splitting_coords(a))) {
            return Counterexample{"splitting-linear", {a}, {rd.splitting_coords(a)},
                                  "h_alpha outside the span of the basis splitting elements"};
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const std::vector<Weight> pair{roots[i], roots[j]};
            const Subspace ws = weight_span(pair);
            const Subspace hs = h_span(pair);
            for (const auto& a : roots) {
                if (ws.contains(a.coords) && !hs.contains(rd.splitting_coords(a))) {
                    return Counterexample{"splitting-linear", {a, roots[i], roots[j]}, {},
                                          "alpha in span{b1, b2} but h_alpha not in span{h_b1, h_b2}"};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_maximal_toral(const WeightDecomposition& d)
{
    if (!is_semisimple(d.algebra())) {
        throw PreconditionError("is_maximal_toral: algebra is not semisimple");
    }
    return d.zero_space() == d.toral().space();
}

bool is_maximal_toral(const RootDatum& rd)
{
    return is_maximal_toral(rd.decomposition());
}

CheckResult killing_identities(const RootDatum& rd)
{
    if (!is_maximal_toral(rd)) {
        throw PreconditionError("killing_identities: toral subalgebra is not maximal");
    }
    const LieAlgebra& algebra = rd.algebra();
    const auto& basis = rd.toral().chosen_basis();
    std::vector<Vector> hs;
    for (const auto& beta : rd.roots()) {
        const Element& hb = rd.splitting_element(beta);
        const Rational norm = killing_form(algebra, hb, hb);
        if (sgn(norm) == 0) {
            return Counterexample{"killing-nondegenerate", {beta}, {hb}, "kappa(h_b, h_b) = 0"};
        }
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const Rational lhs = beta.coords[t] * norm;
            const Rational rhs = 2 * killing_form(algebra, basis[t], hb);
            if (lhs != rhs) {
                return Counterexample{"killing-weight-formula", {beta}, {basis[t], Vector{lhs, rhs}},
                                      "b(t) kappa(h_b,h_b) != 2 kappa(t,h_b)"};
            }
        }
        hs.push_back(hb);
    }
    if (Subspace::span(algebra.dim(), hs) != rd.toral().space()) {
        return Counterexample{"killing-span", {}, {}, "splitting elements do not span h"};
    }
    return std::nullopt;
}

namespace {

// All k with beta + k alpha in R u {0}, found by testing each candidate
// gamma in R u {0} for gamma - beta being an integer multiple of alpha.
std::vector<long> raw_string(const RootDatum& rd, const Weight& beta, const Weight& alpha)
{
    std::vector<Weight> candidates = rd.roots();
    candidates.push_back(rd.decomposition().zero_weight());
    std::size_t pivot = 0;
    while (sgn(alpha.coords[pivot]) == 0) {
        ++pivot;
    }
    std::vector<long> ks;
    for (const auto& gamma : candidates) {
        const Weight diff = gamma - beta;
        const Rational k = diff.coords[pivot] / alpha.coords[pivot];
        if (is_integer(k) && diff == k * alpha) {
            ks.push_back(k.get_num().get_si());
        }
    }
    std::sort(ks.begin(), ks.end());
    return ks;
}

bool is_interval(const std::vector<long>& ks)
{
    for (std::size_t i = 1; i < ks.size(); ++i) {
        if (ks[i] != ks[i - 1] + 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<long> root_string(const RootDatum& rd, const Weight& beta, const Weight& alpha)
{
    if (!rd.is_root(beta) || !rd.is_root(alpha)) {
        throw PreconditionError("root_string: arguments must be roots");
    }
    if (!rd.integrable(alpha)) {
        throw PreconditionError("root_string: " + to_string(alpha) + " is not integrable");
    }
    auto ks = raw_string(rd, beta, alpha);
    if (!is_interval(ks) || !std::binary_search(ks.begin(), ks.end(), 0L)) {
        throw InvariantViolation("root string of " + to_string(beta) + " along " + to_string(alpha) +
                                 " is not an interval through 0");
    }
    const Rational p = rd.pairing(beta, alpha);
    if (!is_integer(p) || !rd.is_root(rd.reflect(alpha, beta))) {
        throw InvariantViolation("reflection of " + to_string(beta) + " along " + to_string(alpha) +
                                 " is not a root");
    }
    return ks;
}

CheckResult root_string_properties(const RootDatum& rd)
{
    const LieAlgebra& algebra = rd.algebra();
    const auto& d = rd.decomposition();
    for (const auto& alpha : rd.roots()) {
        if (!rd.integrable(alpha)) {
            continue;
        }
        for (const auto& beta : rd.roots()) {
            const Rational p = rd.pairing(beta, alpha);
            if (!is_integer(p)) {
                return Counterexample{"integrality", {beta, alpha}, {Vector{p}}, "b(h_a) is not an integer"};
            }
            if (!rd.is_root(rd.reflect(alpha, beta))) {
                return Counterexample{"reflection", {beta, alpha}, {Vector{p}}, "b - b(h_a) a is not a root"};
            }
            const auto ks = raw_string(rd, beta, alpha);
            if (!is_interval(ks)) {
                Vector values;
                for (long k : ks) {
                    values.emplace_back(k);
                }
                return Counterexample{"string-interval", {beta, alpha}, {values}, "root string has a gap"};
            }
            if (sgn(p) > 0 && !rd.is_root_or_zero(beta - alpha)) {
                return Counterexample{"sign-rule", {beta, alpha}, {Vector{p}}, "b(h_a) > 0 but b - a not in R u {0}"};
            }
            if (sgn(p) < 0 && !rd.is_root_or_zero(beta + alpha)) {
                return Counterexample{"sign-rule", {beta, alpha}, {Vector{p}}, "b(h_a) < 0 but b + a not in R u {0}"};
            }
            if (rd.is_root(alpha + beta)) {
                const Subspace lb = d.space(beta);
                bool nonzero = false;
                for (std::size_t i = 0; i < lb.dim() && !nonzero; ++i) {
                    nonzero = !is_zero(algebra.bracket(rd.triple(alpha).e, lb.basis_vector(i)));
                }
                if (!nonzero) {
                    return Counterexample{"bracket-nonvanishing", {alpha, beta}, {}, "[e_a, L_b] = 0 although a + b is a root"};
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult scaled_root_check(const RootDatum& rd)
{
    const Rational allowed[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                Rational(2), Rational(-2)};
    for (const auto& alpha : rd.roots()) {
        std::size_t pivot = 0;
        while (sgn(alpha.coords[pivot]) == 0) {
            ++pivot;
        }
        for (const auto& beta : rd.roots()) {
            const Rational k = beta.coords[pivot] / alpha.coords[pivot];
            if (beta == k * alpha &&
                std::find(std::begin(allowed), std::end(allowed), k) == std::end(allowed)) {
                return Counterexample{"scaled-roots", {alpha, beta}, {Vector{k}},
                                      "k alpha is a root for k outside {+-1, +-1/2, +-2}"};
            }
        }
    }
    return std::nullopt;
}

CheckResult pairing_bound_check(const RootDatum& rd)
{
    for (const auto& alpha : rd.roots()) {
        for (const auto& beta : rd.roots()) {
            const Rational p = rd.pairing(beta, alpha);
            if (!is_integer(p) || p < -4 || p > 4) {
                return Counterexample{"pairing-bound", {beta, alpha}, {Vector{p}},
                                      "b(h_a) is not an integer in [-4, 4]"};
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ideals and subalgebras

bool is_symmetric(const std::vector<Weight>& subset)
{
    return std::all_of(subset.begin(), subset.end(),
                       [&](const Weight& a) { return contains_weight(subset, -a); });
}

bool is_closed(const RootDatum& rd, const std::vector<Weight>& subset)
{
    for (const auto& a : subset) {
        for (const auto& b : subset) {
            const Weight s = a + b;
            if (rd.is_root(s) && !contains_weight(subset, s)) {
                return false;
            }
        }
    }
    return true;
}

IdealRootSubset ideal_root_subset(const RootDatum& rd, const Subspace& ideal)
{
    const LieAlgebra& algebra = rd.algebra();
    if (!is_ideal(algebra, ideal)) {
        throw NotAnIdeal("subspace is not an ideal");
    }
    const auto& d = rd.decomposition();
    IdealRootSubset out{ideal, {}};
    std::size_t dim_sum = intersect(ideal, d.zero_space()).dim();
    for (const auto& a : rd.roots()) {
        if (!intersect(ideal, d.space(a)).is_zero()) {
            out.roots.push_back(a);
            if (!ideal.contains(d.space(a))) {
                throw InvariantViolation("ideal meets L_" + to_string(a) + " without containing it");
            }
            dim_sum += d.space(a).dim();
        }
    }
    if (!is_symmetric(out.roots) || !is_closed(rd, out.roots)) {
        throw InvariantViolation("root subset of an ideal is not symmetric and closed");
    }
    if (dim_sum != ideal.dim()) {
        throw InvariantViolation("ideal is not the sum of its weight components");
    }
    return out;
}

Subspace complement_ideal(const RootDatum& rd, const IdealRootSubset& iis)
{
    const LieAlgebra& algebra = rd.algebra();
    if (bracket_pair_span(rd, rd.roots()) != rd.decomposition().zero_space()) {
        throw PreconditionError("complement_ideal: L_0 is not spanned by brackets of opposite root spaces");
    }
    std::vector<Weight> delta;
    for (const auto& a : rd.roots()) {
        if (!contains_weight(iis.roots, a)) {
            delta.push_back(a);
        }
    }
    Subspace j = bracket_pair_span(rd, delta) + root_space_sum(rd, delta);
    if (!is_ideal(algebra, j)) {
        throw InvariantViolation("complement is not an ideal");
    }
    if (iis.ideal + j != Subspace::full(algebra.dim())) {
        throw InvariantViolation("ideal and complement do not span L");
    }
    if (!center(algebra).contains(intersect(iis.ideal, j))) {
        throw InvariantViolation("ideal and complement meet outside the center");
    }
    return j;
}

Core core(const RootDatum& rd)
{
    for (const auto& a : rd.roots()) {
        if (!rd.integrable(a)) {
            throw PreconditionError("core: root " + to_string(a) + " is not integrable");
        }
    }
    const LieAlgebra& algebra = rd.algebra();
    const Subspace core_space = bracket_pair_span(rd, rd.roots()) + root_space_sum(rd, rd.roots());
    const Subspace z = centralizer_within(algebra, core_space);

    // Complement of Z inside L_c: echelon basis vectors of L_c at the
    // coordinates that are not pivots of Z (written in L_c coordinates).
    std::vector<Vector> z_coords;
    for (std::size_t i = 0; i < z.dim(); ++i) {
        z_coords.push_back(*core_space.coordinates(z.basis_vector(i)));
    }
    const Subspace z_local = Subspace::span(core_space.dim(), z_coords);
    std::vector<bool> taken(core_space.dim(), false);
    for (auto p : z_local.pivots()) {
        taken[p] = true;
    }
    std::vector<Element> complement;
    for (std::size_t i = 0; i < core_space.dim(); ++i) {
        if (!taken[i]) {
            complement.push_back(core_space.basis_vector(i));
        }
    }
    auto centerless = std::make_shared<const LieAlgebra>(quotient(algebra, complement, z));
    if (validate(*centerless)) {
        throw InvariantViolation("centerless core fails the Jacobi identity");
    }
    const bool semisimple = is_semisimple(*centerless);
    return Core{core_space, z, std::move(complement), std::move(centerless), semisimple};
}

RootSubalgebra sub_from_roots(const RootDatum& rd, const std::vector<Weight>& delta_in,
                              SamplingOptions sampling)
{
    const std::vector<Weight> delta = sorted_unique(delta_in);
    if (delta.empty()) {
        throw PreconditionError("sub_from_roots: empty root subset");
    }
    for (const auto& a : delta) {
        if (!rd.is_root(a)) {
            throw PreconditionError("sub_from_roots: " + to_string(a) + " is not a root");
        }
        if (!rd.integrable(a)) {
            throw PreconditionError("sub_from_roots: " + to_string(a) + " is not integrable");
        }
    }
    if (!is_symmetric(delta)) {
        throw PreconditionError("sub_from_roots: subset is not symmetric");
    }
    if (!is_closed(rd, delta)) {
        throw PreconditionError("sub_from_roots: subset is not closed");
    }
    const LieAlgebra& algebra = rd.algebra();
    const auto& d = rd.decomposition();
    const Subspace brackets = bracket_pair_span(rd, delta);
    const Subspace space = brackets + root_space_sum(rd, delta);
    const Subspace toral_space = intersect(rd.toral().space(), brackets);

    // Restriction of Delta u {0} to h_Delta (values on its echelon basis).
    std::vector<Vector> toral_coords;
    for (std::size_t i = 0; i < toral_space.dim(); ++i) {
        toral_coords.push_back(*rd.toral().coordinates(toral_space.basis_vector(i)));
    }
    std::map<Weight, Weight> restriction;
    std::vector<Weight> with_zero = delta;
    with_zero.push_back(d.zero_weight());
    for (const auto& a : with_zero) {
        Vector values;
        for (const auto& c : toral_coords) {
            values.push_back(a(c));
        }
        restriction.emplace(a, Weight{std::move(values)});
    }
    {
        std::vector<Weight> images;
        for (const auto& [a, r] : restriction) {
            images.push_back(r);
        }
        if (sorted_unique(images).size() != images.size()) {
            throw InvariantViolation("restriction to h_Delta is not injective on Delta u {0}");
        }
    }

    auto sub_algebra = std::make_shared<const LieAlgebra>(restrict_to(algebra, space.basis_vectors()));
    std::vector<Element> sub_toral_basis;
    for (std::size_t i = 0; i < toral_space.dim(); ++i) {
        sub_toral_basis.push_back(*space.coordinates(toral_space.basis_vector(i)));
    }
    ToralSubalgebra sub_toral(sub_algebra, std::move(sub_toral_basis));
    WeightDecomposition sub_d = weight_decomposition(sub_toral);

    std::vector<Weight> expected;
    for (const auto& a : delta) {
        expected.push_back(restriction.at(a));
    }
    if (sorted_unique(expected) != sub_d.roots()) {
        throw InvariantViolation("roots of (L_Delta, h_Delta) are not the restrictions of Delta");
    }
    // Each weight space of L_Delta is the corresponding L_alpha.
    for (const auto& a : delta) {
        const Subspace local = sub_d.space(restriction.at(a));
        std::vector<Vector> ambient;
        for (std::size_t i = 0; i < local.dim(); ++i) {
            const Vector c = local.basis_vector(i);
            Vector v = algebra.zero();
            for (std::size_t b = 0; b < c.size(); ++b) {
                if (sgn(c[b]) != 0) {
                    v += c[b] * space.basis_vector(b);
                }
            }
            ambient.push_back(std::move(v));
        }
        if (Subspace::span(algebra.dim(), ambient) != d.space(a)) {
            throw InvariantViolation("weight space of L_Delta differs from L_" + to_string(a));
        }
    }

    auto admissible = is_admissible(sub_d, sampling);
    if (auto* failure = std::get_if<AdmissibilityFailure>(&admissible)) {
        throw InvariantViolation("(L_Delta, h_Delta) is not admissible: " + failure->message);
    }
    return RootSubalgebra{space, toral_space, AlgebraWithToral{sub_algebra, sub_toral}, std::move(restriction),
                          std::get<RootDatum>(std::move(admissible))};
}

std::vector<std::vector<Weight>> connected_root_classes(const RootDatum& rd)
{
    const auto& roots = rd.roots();
    std::vector<std::size_t> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (sgn(rd.pairing(roots[j], roots[i])) != 0) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::map<std::size_t, std::vector<Weight>> classes;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::size_t r = find(i);
        if (!classes.contains(r)) {
            order.push_back(r);
        }
        classes[r].push_back(roots[i]);
    }
    std::vector<std::vector<Weight>> out;
    for (auto r : order) {
        out.push_back(std::move(classes[r]));
    }
    return out;
}

std::vector<SimpleIdeal> simple_ideal_decomposition(const RootDatum& rd)
{
    if (!is_maximal_toral(rd)) {
        throw PreconditionError("simple_ideal_decomposition: toral subalgebra is not maximal");
    }
    const LieAlgebra& algebra = rd.algebra();
    const Subspace& h = rd.toral().space();
    std::vector<SimpleIdeal> out;
    for (auto& cls : connected_root_classes(rd)) {
        Subspace ideal = bracket_pair_span(rd, cls) + root_space_sum(rd, cls);
        if (!is_ideal(algebra, ideal)) {
            throw InvariantViolation("component subalgebra is not an ideal");
        }
        Subspace toral_part = intersect(h, ideal);
        out.push_back({std::move(ideal), std::move(cls), std::move(toral_part)});
    }
    std::size_t dim_sum = 0;
    std::size_t toral_sum = 0;
    Subspace total = Subspace::zero(algebra.dim());
    Subspace toral_total = Subspace::zero(algebra.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            if (!bracket_span(algebra, out[i].ideal, out[j].ideal).is_zero()) {
                throw InvariantViolation("distinct component ideals do not commute");
            }
        }
        dim_sum += out[i].ideal.dim();
        toral_sum += out[i].toral_part.dim();
        total = total + out[i].ideal;
        toral_total = toral_total + out[i].toral_part;
    }
    if (dim_sum != algebra.dim() || total.dim() != algebra.dim()) {
        throw InvariantViolation("component ideals do not form a direct sum equal to L");
    }
    if (toral_sum != h.dim() || toral_total != h) {
        throw InvariantViolation("toral subalgebra is not the direct sum of its component parts");
    }
    return out;
}

Matrix theta_automorphism(const RootDatum& rd, const Weight& alpha)
{
    if (!rd.integrable(alpha)) {
        throw PreconditionError("theta_automorphism: " + to_string(alpha) + " is not integrable");
    }
    const LieAlgebra& algebra = rd.algebra();
    const Sl2Triple& t = rd.triple(alpha);
    const Matrix exp_e = exp_ad(algebra, t.e);
    const Matrix theta = exp_e * exp_ad(algebra, -t.f) * exp_e;
    const auto& d = rd.decomposition();
    for (const auto& beta : rd.roots()) {
        if (image(theta, d.space(beta)) != d.space(rd.reflect(alpha, beta))) {
            throw InvariantViolation("theta_" + to_string(alpha) + " does not map L_" + to_string(beta) +
                                     " onto L_" + to_string(rd.reflect(alpha, beta)));
        }
    }
    return theta;
}

std::vector<Weight> generated_root_support(const RootDatum& rd, const std::vector<Weight>& m)
{
    const auto& d = rd.decomposition();
    std::vector<Element> generators;
    for (const auto& a : m) {
        for (const auto& s : {d.space(a), d.space(-a)}) {
            auto vs = s.basis_vectors();
            generators.insert(generators.end(), vs.begin(), vs.end());
        }
    }
    if (generators.empty()) {
        return {};
    }
    const Subspace g = generated_subalgebra(rd.algebra(), generators);
    std::vector<Weight> out;
    for (const auto& a : rd.roots()) {
        if (!intersect(g, d.space(a)).is_zero()) {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace lietk
