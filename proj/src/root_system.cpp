#include "lietk/root_system.hpp"

#include "lietk/admissible.hpp"
#include "lietk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <functional>
#include <set>

namespace lietk {

namespace {

struct VectorLess {
    bool operator()(const Vector& a, const Vector& b) const { return compare(a, b) < 0; }
};

using VectorSet = std::set<Vector, VectorLess>;

std::vector<Vector> sorted(std::vector<Vector> v)
{
    std::sort(v.begin(), v.end(), VectorLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool has(const std::vector<Vector>& sorted_set, const Vector& v)
{
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v, VectorLess{});
}

}  // namespace

AbstractRootSystem::AbstractRootSystem(std::size_t rank, std::vector<Vector> roots,
                                       std::vector<Vector> coroots, std::optional<Subspace> space)
    : rank_(rank), space_(space ? std::move(*space) : Subspace::full(rank))
{
    if (roots.size() != coroots.size()) {
        throw std::invalid_argument("one coroot per root is required");
    }
    if (space_.ambient_dim() != rank) {
        throw DimensionMismatch("root system space has the wrong ambient dimension");
    }
    std::vector<std::size_t> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].size() != rank || coroots[i].size() != rank) {
            throw DimensionMismatch("root or coroot of the wrong length");
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return compare(roots[a], roots[b]) < 0; });
    for (auto i : order) {
        roots_.push_back(std::move(roots[i]));
        coroots_.push_back(std::move(coroots[i]));
    }
}

std::optional<std::size_t> AbstractRootSystem::index_of(const Vector& v) const
{
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v, VectorLess{});
    if (it == roots_.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - roots_.begin());
}

const Vector& AbstractRootSystem::coroot(const Vector& alpha) const
{
    auto i = index_of(alpha);
    if (!i) {
        throw PreconditionError(to_string(alpha) + " is not a root");
    }
    return coroots_[*i];
}

std::string to_string(AxiomClause clause)
{
    switch (clause) {
    case AxiomClause::duplicate_root:
        return "duplicate-root";
    case AxiomClause::zero_root:
        return "zero-root";
    case AxiomClause::not_spanning:
        return "not-spanning";
    case AxiomClause::coroot_normalization:
        return "coroot-normalization";
    case AxiomClause::reflection:
        return "reflection";
    case AxiomClause::integrality:
        return "integrality";
    }
    return "?";
}

std::optional<AxiomViolation> check_axioms(const AbstractRootSystem& rs)
{
    const auto& roots = rs.roots();
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (roots[i] == roots[i - 1]) {
            return AxiomViolation{AxiomClause::duplicate_root, {roots[i]}, "root listed twice"};
        }
    }
    for (const auto& a : roots) {
        if (is_zero(a)) {
            return AxiomViolation{AxiomClause::zero_root, {a}, "0 is listed as a root"};
        }
    }
    if (Subspace::span(rs.rank(), roots) != rs.space()) {
        return AxiomViolation{AxiomClause::not_spanning, {}, "roots do not span the space"};
    }
    for (const auto& a : roots) {
        if (rs.pairing(a, a) != 2) {
            return AxiomViolation{AxiomClause::coroot_normalization, {a, rs.coroot(a)},
                                  "coroot takes value " + to_string(rs.pairing(a, a)) + " on its root"};
        }
    }
    for (const auto& a : roots) {
        for (const auto& b : roots) {
            if (!rs.contains(reflect(rs, a, b))) {
                return AxiomViolation{AxiomClause::reflection, {a, b},
                                      "s_a(b) = " + to_string(reflect(rs, a, b)) + " is not a root"};
            }
        }
    }
    for (const auto& a : roots) {
        for (const auto& b : roots) {
            if (!is_integer(rs.pairing(a, b))) {
                return AxiomViolation{AxiomClause::integrality, {a, b},
                                      "a-check(b) = " + to_string(rs.pairing(a, b)) + " is not an integer"};
            }
        }
    }
    return std::nullopt;
}

Vector reflect(const AbstractRootSystem& rs, const Vector& alpha, const Vector& beta)
{
    return beta - rs.pairing(alpha, beta) * alpha;
}

bool is_symmetric_subset(const std::vector<Vector>& subset)
{
    const auto s = sorted(subset);
    return std::all_of(s.begin(), s.end(), [&](const Vector& a) { return has(s, -a); });
}

bool is_closed_subset(const AbstractRootSystem& rs, const std::vector<Vector>& subset)
{
    const auto s = sorted(subset);
    for (const auto& a : s) {
        for (const auto& b : s) {
            const Vector sum = a + b;
            if (rs.contains(sum) && !has(s, sum)) {
                return false;
            }
        }
    }
    return true;
}

bool is_subsystem(const AbstractRootSystem& rs, const std::vector<Vector>& subset)
{
    if (subset.empty()) {
        return false;
    }
    const auto s = sorted(subset);
    for (const auto& a : s) {
        if (!rs.contains(a)) {
            return false;
        }
        for (const auto& b : s) {
            if (!has(s, reflect(rs, a, b))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Vector>> connected_components(const AbstractRootSystem& rs)
{
    const auto& roots = rs.roots();
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
            if (sgn(dot(rs.coroot_at(i), roots[j])) != 0) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<Vector>> out;
    std::vector<std::size_t> rep_of_class;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::size_t r = find(i);
        auto it = std::find(rep_of_class.begin(), rep_of_class.end(), r);
        if (it == rep_of_class.end()) {
            rep_of_class.push_back(r);
            out.emplace_back();
            it = rep_of_class.end() - 1;
        }
        out[static_cast<std::size_t>(it - rep_of_class.begin())].push_back(roots[i]);
    }
    for (const auto& component : out) {
        if (!is_subsystem(rs, component) || !is_closed_subset(rs, component)) {
            throw InvariantViolation("connected component is not a closed subsystem");
        }
    }
    return out;
}

std::vector<Vector> closure_delta_m(const AbstractRootSystem& rs, const std::vector<Vector>& m)
{
    VectorSet current;
    for (const auto& a : m) {
        if (!rs.contains(a)) {
            throw PreconditionError("closure_delta_m: " + to_string(a) + " is not a root");
        }
        current.insert(a);
        current.insert(-a);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Vector> snapshot(current.begin(), current.end());
        for (const auto& a : snapshot) {
            for (const auto& b : snapshot) {
                Vector s = a + b;
                if (rs.contains(s) && current.insert(s).second) {
                    current.insert(-s);
                    grew = true;
                }
            }
        }
    }
    std::vector<Vector> out(current.begin(), current.end());
    if (!is_symmetric_subset(out) || !is_closed_subset(rs, out)) {
        throw InvariantViolation("closure is not symmetric and closed");
    }
    for (const auto& a : out) {
        for (const auto& b : out) {
            if (!current.contains(reflect(rs, a, b))) {
                throw InvariantViolation("closure is not stable under its reflections");
            }
        }
    }
    return out;
}

std::optional<std::vector<std::size_t>> partial_sum_witness(const AbstractRootSystem& rs,
                                                            const std::vector<Vector>& summands,
                                                            const Vector& beta)
{
    const std::size_t k = summands.size();
    if (k == 0 || k > 20) {
        throw PreconditionError("partial_sum_witness: needs between 1 and 20 summands");
    }
    Vector total = zero_vector(beta.size());
    for (const auto& s : summands) {
        total += s;
    }
    if (total != beta) {
        throw PreconditionError("partial_sum_witness: summands do not add up to beta");
    }
    // The prefix sum only depends on which summands were used, so failed
    // masks can be remembered.
    std::set<std::uint32_t> dead;
    std::vector<std::size_t> order;
    auto ok = [&](const Vector& v) { return is_zero(v) || rs.contains(v); };
    std::function<bool(std::uint32_t, const Vector&)> search = [&](std::uint32_t used, const Vector& prefix) {
        if (order.size() == k) {
            return true;
        }
        if (dead.contains(used)) {
            return false;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (used & (1u << i)) {
                continue;
            }
            Vector next = prefix + summands[i];
            if (!ok(next)) {
                continue;
            }
            order.push_back(i);
            if (search(used | (1u << i), next)) {
                return true;
            }
            order.pop_back();
        }
        dead.insert(used);
        return false;
    };
    if (search(0, zero_vector(beta.size()))) {
        return order;
    }
    return std::nullopt;
}

PartialSumSweep partial_sum_sweep(const AbstractRootSystem& rs, std::size_t max_k, std::size_t exhaustive_cap,
                                  std::size_t samples, std::uint64_t seed)
{
    PartialSumSweep sweep;
    const auto& roots = rs.roots();
    if (roots.empty() || max_k == 0) {
        sweep.enumeration_complete = true;
        return sweep;
    }
    auto check = [&](const std::vector<std::size_t>& picks) {
        std::vector<Vector> summands;
        Vector beta = zero_vector(rs.rank());
        for (auto p : picks) {
            summands.push_back(roots[p]);
            beta += roots[p];
        }
        if (!rs.contains(beta)) {
            return false;
        }
        if (!partial_sum_witness(rs, summands, beta)) {
            if (sweep.misses++ == 0) {
                sweep.first_miss = summands;
            }
        }
        return true;
    };

    // Nondecreasing index sequences enumerate each multiset once.
    bool capped = false;
    for (std::size_t k = 1; k <= max_k && !capped; ++k) {
        std::vector<std::size_t> picks(k, 0);
        while (true) {
            if (check(picks) && ++sweep.exhaustive >= exhaustive_cap) {
                capped = true;
                break;
            }
            std::size_t pos = k;
            while (pos > 0 && picks[pos - 1] == roots.size() - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++picks[pos - 1];
            std::fill(picks.begin() + static_cast<std::ptrdiff_t>(pos), picks.end(), picks[pos - 1]);
        }
    }
    sweep.enumeration_complete = !capped;
    if (!capped) {
        return sweep;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(2, max_k));
    std::uniform_int_distribution<std::size_t> root_dist(0, roots.size() - 1);
    // Random multisets rarely sum to a root; bound the attempts.
    for (std::size_t attempts = 0; sweep.sampled < samples && attempts < 1000 * (samples + 1); ++attempts) {
        std::vector<std::size_t> picks(size_dist(rng));
        for (auto& p : picks) {
            p = root_dist(rng);
        }
        if (check(picks)) {
            ++sweep.sampled;
        }
    }
    return sweep;
}

CartanSolution cartan_solve(const AbstractRootSystem& rs, const std::vector<Vector>& base,
                            const Vector& eta)
{
    const std::size_t n = base.size();
    Matrix pairing(n, n);
    Vector rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector& coroot = rs.coroot(base[j]);
        for (std::size_t i = 0; i < n; ++i) {
            pairing(j, i) = dot(coroot, base[i]);
        }
        rhs[j] = dot(coroot, eta);
    }
    auto solution = solve_affine(pairing, rhs);
    if (!solution || !solution->kernel.is_zero()) {
        throw PreconditionError("cartan_solve: pairing matrix of the base is singular");
    }
    Vector combined = zero_vector(rs.rank());
    for (std::size_t i = 0; i < n; ++i) {
        combined += solution->particular[i] * base[i];
    }
    const bool in_span = combined == eta;
    if (!in_span && Subspace::span(rs.rank(), base).contains(eta)) {
        throw InvariantViolation("cartan_solve: solution does not reproduce eta inside span(base)");
    }
    return {std::move(solution->particular), in_span};
}

FinitenessCertificate span_finiteness_certificate(const AbstractRootSystem& rs,
                                                  const std::vector<Vector>& base)
{
    const std::size_t n = base.size();
    const Subspace span = Subspace::span(rs.rank(), base);
    FinitenessCertificate cert;
    for (const auto& eta : rs.roots()) {
        if (!span.contains(eta)) {
            continue;
        }
        ++cert.roots_in_span;
        for (const auto& b : base) {
            const Rational p = rs.pairing(b, eta);
            if (!is_integer(p) || p < -4 || p > 4) {
                cert.pairings_bounded = false;
            }
        }
    }
    // x = P^{-1} rhs over the box rhs in {-4..4}^n.
    Matrix pairing(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            pairing(j, i) = rs.pairing(base[j], base[i]);
        }
    }
    Matrix inverse(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto col = solve_affine(pairing, unit_vector(n, c));
        if (!col || !col->kernel.is_zero()) {
            throw PreconditionError("span_finiteness_certificate: singular pairing matrix");
        }
        inverse.set_column(c, col->particular);
    }
    std::vector<int> rhs(n, -4);
    while (true) {
        Vector b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = rhs[i];
        }
        const Vector x = inverse.apply(b);
        Vector eta = zero_vector(rs.rank());
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(x[i]) != 0) {
                eta += x[i] * base[i];
            }
        }
        if (rs.contains(eta)) {
            ++cert.box_solutions_in_roots;
        }
        std::size_t pos = 0;
        while (pos < n && rhs[pos] == 4) {
            rhs[pos] = -4;
            ++pos;
        }
        if (pos == n) {
            break;
        }
        ++rhs[pos];
    }
    return cert;
}

SdivResult sdiv(const AbstractRootSystem& rs)
{
    Subsystem sub;
    for (const auto& a : rs.roots()) {
        if (!rs.contains(Rational(2) * a)) {
            sub.members.push_back(a);
        }
    }
    if (!sub.members.empty() && !is_subsystem(rs, sub.members)) {
        throw InvariantViolation("semi-divisible subset is not a subsystem");
    }
    const bool reduced = sub.members.size() == rs.size();
    return {std::move(sub), reduced};
}

namespace {

// f(v) = sum_i k^i v_i for the first k = 2, 3, ... that vanishes on no root.
Vector generic_functional(const AbstractRootSystem& rs)
{
    for (long k = 2;; ++k) {
        Vector f(rs.rank());
        Rational power(1);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            f[i] = power;
            power *= k;
        }
        if (std::none_of(rs.roots().begin(), rs.roots().end(),
                         [&](const Vector& a) { return sgn(dot(f, a)) == 0; })) {
            return f;
        }
    }
}

std::vector<Vector> simple_roots_of(const AbstractRootSystem& rs, const std::vector<Vector>& subset,
                                    const Vector& f)
{
    std::vector<Vector> positive;
    for (const auto& a : subset) {
        if (sgn(dot(f, a)) > 0) {
            positive.push_back(a);
        }
    }
    positive = sorted(std::move(positive));
    std::vector<Vector> simple;
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive) {
            if (has(positive, a - b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) {
            simple.push_back(a);
        }
    }
    (void)rs;
    return simple;
}

}  // namespace

std::vector<Vector> simple_roots(const AbstractRootSystem& rs)
{
    return simple_roots_of(rs, rs.roots(), generic_functional(rs));
}

Matrix cartan_matrix(const AbstractRootSystem& rs, const std::vector<Vector>& base)
{
    Matrix m(base.size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = 0; j < base.size(); ++j) {
            m(i, j) = rs.pairing(base[i], base[j]);
        }
    }
    return m;
}

RootSystemFingerprint fingerprint(const AbstractRootSystem& rs)
{
    const auto components = connected_components(rs);
    const Vector f = generic_functional(rs);
    RootSystemFingerprint fp{rs.size(), components.size(), {}};
    for (const auto& component : components) {
        const auto base = simple_roots_of(rs, component, f);
        const Matrix c = cartan_matrix(rs, base);
        std::vector<Rational> entries;
        for (std::size_t i = 0; i < c.rows(); ++i) {
            for (std::size_t j = 0; j < c.cols(); ++j) {
                entries.push_back(c(i, j));
            }
        }
        std::sort(entries.begin(), entries.end());
        std::size_t short_roots = 0;
        for (const auto& a : component) {
            const bool shorter = std::any_of(component.begin(), component.end(), [&](const Vector& b) {
                const Rational ab = rs.pairing(a, b);
                return sgn(ab) != 0 && rs.pairing(b, a) == 2 * ab;
            });
            short_roots += shorter ? 1 : 0;
        }
        fp.components.push_back({component.size(), short_roots, std::move(entries)});
    }
    std::sort(fp.components.begin(), fp.components.end());
    return fp;
}

RootFamily parse_root_family(std::string_view name)
{
    if (name == "A") {
        return RootFamily::A;
    }
    if (name == "B") {
        return RootFamily::B;
    }
    if (name == "C") {
        return RootFamily::C;
    }
    if (name == "D") {
        return RootFamily::D;
    }
    if (name == "BC") {
        return RootFamily::BC;
    }
    throw UnsupportedFamily("unknown root system family '" + std::string(name) + "'");
}

std::string to_string(RootFamily family)
{
    switch (family) {
    case RootFamily::A:
        return "A";
    case RootFamily::B:
        return "B";
    case RootFamily::C:
        return "C";
    case RootFamily::D:
        return "D";
    case RootFamily::BC:
        return "BC";
    }
    return "?";
}

std::size_t family_minimum(RootFamily family)
{
    return family == RootFamily::D ? 2 : 1;
}

AbstractRootSystem family_truncation(RootFamily family, std::size_t n)
{
    if (n < family_minimum(family)) {
        throw UnsupportedFamily(to_string(family) + "_" + std::to_string(n) + " is not supported");
    }
    const std::size_t dim = family == RootFamily::A ? n + 1 : n;
    std::vector<Vector> roots;
    auto e = [&](std::size_t i) { return unit_vector(dim, i); };
    if (family == RootFamily::A) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                if (i != j) {
                    roots.push_back(e(i) - e(j));
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (int si : {1, -1}) {
                    for (int sj : {1, -1}) {
                        roots.push_back(Rational(si) * e(i) + Rational(sj) * e(j));
                    }
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (int s : {1, -1}) {
                if (family == RootFamily::B || family == RootFamily::BC) {
                    roots.push_back(Rational(s) * e(i));
                }
                if (family == RootFamily::C || family == RootFamily::BC) {
                    roots.push_back(Rational(2 * s) * e(i));
                }
            }
        }
    }
    std::vector<Vector> coroots;
    for (const auto& a : roots) {
        coroots.push_back((Rational(2) / dot(a, a)) * a);
    }
    std::optional<Subspace> space;
    if (family == RootFamily::A) {
        space = Subspace::span(dim, roots);
    }
    AbstractRootSystem rs(dim, std::move(roots), std::move(coroots), std::move(space));
    if (auto v = check_axioms(rs)) {
        throw InvariantViolation("family truncation fails the axioms: " + v->message);
    }
    return rs;
}

Vector embed_truncation(RootFamily family, std::size_t n, const Vector& v)
{
    const std::size_t target = family == RootFamily::A ? n + 2 : n + 1;
    Vector out = v;
    out.resize(target, Rational(0));
    return out;
}

bool ChainReport::pass() const
{
    return union_matches_span &&
           std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.pass(); });
}

ChainReport chain_check(RootFamily family, std::size_t n_max)
{
    if (n_max <= family_minimum(family)) {
        throw PreconditionError("chain_check: n_max must exceed the family minimum");
    }
    ChainReport report{family, n_max, {}, {}, false};
    std::size_t start = family_minimum(family);
    while (start < n_max && connected_components(family_truncation(family, start)).size() != 1) {
        report.reducible_levels.push_back(start);
        ++start;
    }
    const AbstractRootSystem top = family_truncation(family, n_max);
    std::vector<Vector> chain_union;
    for (std::size_t n = start; n < n_max; ++n) {
        const AbstractRootSystem lower = family_truncation(family, n);
        const AbstractRootSystem upper = family_truncation(family, n + 1);
        ChainLink link{n};
        std::vector<Vector> image;
        for (const auto& a : lower.roots()) {
            image.push_back(embed_truncation(family, n, a));
        }
        link.contained = std::all_of(image.begin(), image.end(), [&](const Vector& a) { return upper.contains(a); });
        link.coroots_compatible = link.contained;
        if (link.contained) {
            for (const auto& a : lower.roots()) {
                for (const auto& b : lower.roots()) {
                    if (upper.pairing(embed_truncation(family, n, a), embed_truncation(family, n, b)) !=
                        lower.pairing(a, b)) {
                        link.coroots_compatible = false;
                    }
                }
            }
        }
        link.closed = link.contained && is_closed_subset(upper, image) && is_subsystem(upper, image);
        link.irreducible = connected_components(lower).size() == 1;
        report.links.push_back(link);

        // Carry level n up to n_max coordinates for the union.
        for (auto v : lower.roots()) {
            for (std::size_t m = n; m < n_max; ++m) {
                v = embed_truncation(family, m, v);
            }
            chain_union.push_back(std::move(v));
        }
    }
    chain_union = sorted(std::move(chain_union));
    if (chain_union.empty()) {
        report.union_matches_span = true;
    } else {
        const Subspace span = Subspace::span(top.rank(), chain_union);
        std::vector<Vector> in_span;
        for (const auto& a : top.roots()) {
            if (span.contains(a)) {
                in_span.push_back(a);
            }
        }
        report.union_matches_span = sorted(std::move(in_span)) == chain_union;
    }
    return report;
}

AbstractRootSystem extract_abstract(const RootDatum& rd)
{
    std::vector<Vector> roots;
    std::vector<Vector> coroots;
    for (const auto& a : rd.roots()) {
        if (!rd.integrable(a)) {
            throw PreconditionError("extract_abstract: root " + to_string(a) + " is not integrable");
        }
        roots.push_back(a.coords);
        coroots.push_back(rd.splitting_coords(a));
    }
    AbstractRootSystem rs(rd.toral().dim(), std::move(roots), std::move(coroots));
    if (auto v = check_axioms(rs)) {
        throw InvariantViolation("extracted root system fails the axioms (" + to_string(v->clause) +
                                 "): " + v->message);
    }
    return rs;
}

}  // namespace lietk
