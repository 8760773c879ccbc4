#include "lietk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace lietk::cli {

using nlohmann::json;

namespace {

json to_json(const Rational& r)
{
    return to_string(r);
}

json to_json(const Vector& v)
{
    json out = json::array();
    for (const auto& c : v) {
        out.push_back(to_string(c));
    }
    return out;
}

json to_json(const Weight& w)
{
    return to_json(w.coords);
}

json to_json(const Counterexample& c)
{
    json roots = json::array();
    for (const auto& r : c.roots) {
        roots.push_back(to_json(r));
    }
    json values = json::array();
    for (const auto& v : c.values) {
        values.push_back(to_json(v));
    }
    return {{"check", c.check}, {"roots", roots}, {"values", values}, {"message", c.message}};
}

std::string count(std::size_t n, const std::string& noun)
{
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

CheckRecord passed(std::string name, std::string summary, json details = json::object())
{
    return {std::move(name), CheckStatus::pass, std::move(summary), std::move(details), nullptr};
}

CheckRecord failed(std::string name, std::string summary, json witness, json details = json::object())
{
    return {std::move(name), CheckStatus::fail, std::move(summary), std::move(details), std::move(witness)};
}

CheckRecord skipped(std::string name, const std::string& reason)
{
    return {std::move(name), CheckStatus::skip, reason, {{"reason", reason}}, nullptr};
}

CheckRecord from_check(std::string name, const CheckResult& result, std::string summary, json details = json::object())
{
    if (result) {
        return failed(std::move(name), result->message, to_json(*result), std::move(details));
    }
    return passed(std::move(name), std::move(summary), std::move(details));
}

// ---------------------------------------------------------------------------
// Pipeline stages shared by admissible and verify.

CheckRecord jacobi_record(const LieAlgebra& algebra)
{
    if (auto v = validate(algebra)) {
        const auto& labels = algebra.labels();
        json witness = {{"triple", {v->i, v->j, v->k}},
                        {"labels", {labels[v->i], labels[v->j], labels[v->k]}},
                        {"residual", to_json(v->residual)}};
        return failed("jacobi",
                      "Jacobi identity fails on (" + labels[v->i] + ", " + labels[v->j] + ", " + labels[v->k] + ")",
                      witness);
    }
    return passed("jacobi", "Jacobi identity holds on all basis triples", {{"dim", algebra.dim()}});
}

json decomposition_details(const WeightDecomposition& d)
{
    json weights = json::array();
    for (const auto& [w, space] : d.spaces()) {
        weights.push_back({{"weight", to_json(w)}, {"dim", space.dim()}});
    }
    return {{"toral_dim", d.toral().dim()},
            {"zero_space_dim", d.zero_space().dim()},
            {"root_count", d.roots().size()},
            {"weights", weights}};
}

struct Decomposed {
    CheckRecord record;
    std::optional<WeightDecomposition> decomposition;
};

Decomposed decompose(const std::shared_ptr<const LieAlgebra>& algebra, const std::vector<Vector>& rows)
{
    auto not_toral = [](const std::string& reason, json extra) {
        extra["error"] = "NotToral";
        extra["reason"] = reason;
        return Decomposed{failed("decomposition", "not toral: " + reason, extra), std::nullopt};
    };
    std::optional<ToralSubalgebra> toral;
    try {
        toral.emplace(algebra, rows);
    } catch (const NotToral& e) {
        return not_toral(e.what(), json::object());
    }
    // Rows commute; find a row whose adjoint action is not split.
    if (!is_toral(*algebra, toral->space())) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!is_toral(*algebra, Subspace::span(algebra->dim(), {rows[r]}))) {
                return not_toral("ad of toral row " + std::to_string(r) + " is not diagonalizable over Q",
                                 {{"row", r}, {"vector", to_json(rows[r])}});
            }
        }
        return not_toral("toral rows are not simultaneously diagonalizable over Q", json::object());
    }
    try {
        auto d = weight_decomposition(*toral);
        const auto n = d.roots().size();
        std::string summary = count(n, "root") + ", zero space dim " +
                              std::to_string(d.zero_space().dim());
        return {passed("decomposition", summary, decomposition_details(d)), std::move(d)};
    } catch (const NotSplit& e) {
        return {failed("decomposition", e.what(), {{"error", "NotSplit"}, {"reason", e.what()}}), std::nullopt};
    }
}

json datum_details(const RootDatum& rd)
{
    json roots = json::array();
    for (const auto& a : rd.roots()) {
        roots.push_back({{"root", to_json(a)},
                         {"dim", rd.decomposition().space(a).dim()},
                         {"integrable", rd.integrable(a)},
                         {"h_alpha", to_json(rd.splitting_coords(a))},
                         {"h_alpha_element", to_json(rd.splitting_element(a))}});
    }
    // Row beta, column alpha: beta(h_alpha).
    json pairing = json::array();
    for (const auto& b : rd.roots()) {
        json row = json::array();
        for (const auto& a : rd.roots()) {
            row.push_back(to_json(rd.pairing(b, a)));
        }
        pairing.push_back(row);
    }
    return {{"roots", roots},
            {"pairing", pairing},
            {"all_integrable", rd.all_integrable()},
            {"components", connected_root_classes(rd).size()}};
}

struct Admitted {
    CheckRecord record;
    std::optional<RootDatum> datum;
};

Admitted admissibility(const WeightDecomposition& d, SamplingOptions sampling)
{
    auto result = is_admissible(d, sampling);
    if (auto* failure = std::get_if<AdmissibilityFailure>(&result)) {
        json witness = {{"clause", to_string(failure->clause)}, {"message", failure->message}};
        witness["root"] = failure->root ? to_json(*failure->root) : json(nullptr);
        witness["vector"] = failure->vector ? to_json(*failure->vector) : json(nullptr);
        return {failed("admissibility", "not admissible (" + to_string(failure->clause) + "): " + failure->message,
                       witness),
                std::nullopt};
    }
    auto& rd = std::get<RootDatum>(result);
    auto details = datum_details(rd);
    const std::size_t components = details["components"];
    std::string summary = "admissible, " + count(rd.roots().size(), "root") + ", " + count(components, "component");
    return {passed("admissibility", summary, std::move(details)), std::move(rd)};
}

// ---------------------------------------------------------------------------
// Verification suites.

struct SuiteContext {
    std::optional<RootDatum> datum;
    std::string datum_missing;  // why Lie-side suites cannot run
    std::optional<AbstractRootSystem> abstract;
    std::string abstract_missing;
    // Extracted from the datum, in weight coordinates. Equal to `abstract`
    // for file input; the family truncation uses other coordinates.
    std::optional<AbstractRootSystem> datum_abstract;
    std::optional<std::pair<RootFamily, std::size_t>> family;
    SamplingOptions sampling;
    bool semisimple = false;
};

bool semisimple_and_maximal(const SuiteContext& ctx)
{
    return ctx.semisimple && is_maximal_toral(*ctx.datum);
}

CheckRecord suite_root_strings(const SuiteContext& ctx)
{
    const auto& rd = *ctx.datum;
    if (!rd.all_integrable()) {
        return skipped("root-strings", "some root is not integrable");
    }
    if (auto c = root_string_properties(rd)) {
        return failed("root-strings", c->message, to_json(*c));
    }
    if (auto c = scaled_root_check(rd)) {
        return failed("root-strings", c->message, to_json(*c));
    }
    json strings = json::array();
    for (const auto& b : rd.roots()) {
        for (const auto& a : rd.roots()) {
            strings.push_back({{"beta", to_json(b)},
                               {"alpha", to_json(a)},
                               {"pairing", to_json(rd.pairing(b, a))},
                               {"string", root_string(rd, b, a)}});
        }
    }
    return passed("root-strings",
                  "integrality, reflections, intervals, sign rule and multiples hold for " +
                      std::to_string(rd.roots().size()) + " roots",
                  {{"strings", strings}});
}

CheckRecord suite_partial_sums(const SuiteContext& ctx)
{
    const auto sweep = partial_sum_sweep(*ctx.abstract, 5, 2000, 200, ctx.sampling.seed);
    json details = {{"max_summands", 5},
                    {"exhaustive", sweep.exhaustive},
                    {"enumeration_complete", sweep.enumeration_complete},
                    {"sampled", sweep.sampled}};
    if (sweep.misses > 0) {
        json summands = json::array();
        for (const auto& s : sweep.first_miss) {
            summands.push_back(to_json(s));
        }
        return failed("partial-sums", std::to_string(sweep.misses) + " sums without a partial-sum ordering",
                      {{"summands", summands}, {"misses", sweep.misses}}, details);
    }
    return passed("partial-sums",
                  std::to_string(sweep.exhaustive + sweep.sampled) + " root sums ordered with root partial sums",
                  details);
}

CheckRecord suite_ideals(const SuiteContext& ctx)
{
    if (!semisimple_and_maximal(ctx)) {
        return skipped("ideals", "needs a semisimple algebra with a maximal toral subalgebra");
    }
    const auto& rd = *ctx.datum;
    try {
        json ideals = json::array();
        const auto parts = simple_ideal_decomposition(rd);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const auto iis = ideal_root_subset(rd, parts[p].ideal);
            if (iis.roots != parts[p].roots) {
                return failed("ideals", "root subset of an ideal differs from its component",
                              {{"ideal", p}});
            }
            const Subspace j = complement_ideal(rd, iis);
            Subspace others = Subspace::zero(rd.algebra().dim());
            for (std::size_t q = 0; q < parts.size(); ++q) {
                if (q != p) {
                    others = others + parts[q].ideal;
                }
            }
            if (j != others) {
                return failed("ideals", "complement ideal is not the sum of the other components",
                              {{"ideal", p}});
            }
            ideals.push_back({{"dim", parts[p].ideal.dim()}, {"roots", iis.roots.size()}, {"complement_dim", j.dim()}});
        }
        return passed("ideals", count(parts.size(), "ideal") + " with matching root subsets and complements",
                      {{"ideals", ideals}});
    } catch (const InvariantViolation& e) {
        return failed("ideals", e.what(), {{"message", e.what()}});
    }
}

CheckRecord suite_core(const SuiteContext& ctx)
{
    const auto& rd = *ctx.datum;
    if (!rd.all_integrable()) {
        return skipped("core", "some root is not integrable");
    }
    const Core c = core(rd);
    json details = {{"core_dim", c.core_space.dim()},
                    {"center_dim", c.center_of_core.dim()},
                    {"centerless_dim", c.complement.size()},
                    {"centerless_semisimple", c.centerless_semisimple}};
    if (!c.centerless_semisimple) {
        return failed("core", "core modulo its center is not semisimple",
                      {{"core_dim", c.core_space.dim()}, {"center_dim", c.center_of_core.dim()}}, details);
    }
    return passed("core", "core of dim " + std::to_string(c.core_space.dim()) + " is semisimple modulo its center",
                  details);
}

std::vector<Weight> as_weights(const std::vector<Vector>& vs)
{
    std::vector<Weight> out;
    for (const auto& v : vs) {
        out.push_back(Weight{v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

CheckRecord suite_subalgebras(const SuiteContext& ctx)
{
    const auto& rd = *ctx.datum;
    const auto& rs = *ctx.datum_abstract;
    constexpr std::size_t cap = 120;
    std::set<std::vector<Weight>> seen;
    std::size_t checked = 0;
    bool truncated = false;
    const auto& roots = rs.roots();
    for (std::size_t i = 0; i < roots.size() && !truncated; ++i) {
        for (std::size_t j = i; j < roots.size(); ++j) {
            std::vector<Vector> m{roots[i]};
            if (j != i) {
                m.push_back(roots[j]);
            }
            const auto weights = as_weights(closure_delta_m(rs, m));
            if (!seen.insert(weights).second) {
                continue;
            }
            if (seen.size() > cap) {
                truncated = true;
                break;
            }
            const auto generated = generated_root_support(rd, as_weights(m));
            if (generated != weights) {
                return failed("subalgebras", "closure differs from the roots of the generated subalgebra",
                              {{"generators", to_json(m[0])}, {"closure_size", weights.size()},
                               {"generated_size", generated.size()}});
            }
            try {
                const auto sub = sub_from_roots(rd, weights, ctx.sampling);
                if (sub.datum.roots().size() != weights.size()) {
                    return failed("subalgebras", "subalgebra has the wrong number of roots",
                                  {{"generators", to_json(m[0])}});
                }
            } catch (const InvariantViolation& e) {
                json gens = json::array();
                for (const auto& g : m) {
                    gens.push_back(to_json(g));
                }
                return failed("subalgebras", e.what(), {{"generators", gens}, {"message", e.what()}});
            }
            ++checked;
        }
    }
    return passed("subalgebras", std::to_string(checked) + " root subalgebras are admissible with the expected roots",
                  {{"subsets", checked}, {"truncated", truncated}});
}

CheckRecord suite_simple_ideals(const SuiteContext& ctx)
{
    if (!semisimple_and_maximal(ctx)) {
        return skipped("simple-ideals", "needs a semisimple algebra with a maximal toral subalgebra");
    }
    try {
        const auto parts = simple_ideal_decomposition(*ctx.datum);
        json dims = json::array();
        for (const auto& p : parts) {
            dims.push_back(p.ideal.dim());
        }
        json details = {{"count", parts.size()}, {"dims", dims}};
        if (ctx.datum_abstract) {
            const auto components = fingerprint(*ctx.datum_abstract).component_count;
            details["abstract_components"] = components;
            if (components != parts.size()) {
                return failed("simple-ideals", "ideal count differs from the number of root system components",
                              {{"ideals", parts.size()}, {"components", components}}, details);
            }
        }
        return passed("simple-ideals", count(parts.size(), "simple ideal"), details);
    } catch (const InvariantViolation& e) {
        return failed("simple-ideals", e.what(), {{"message", e.what()}});
    }
}

CheckRecord suite_maximal_toral(const SuiteContext& ctx)
{
    if (!ctx.semisimple) {
        return skipped("maximal-toral", "needs a semisimple algebra");
    }
    const auto& rd = *ctx.datum;
    const bool maximal = is_maximal_toral(rd);
    // Centralizer of h as the common kernel of ad(h_i), independent of the eigenspaces.
    const auto& basis = rd.toral().chosen_basis();
    const std::size_t dim = rd.algebra().dim();
    Matrix stacked(basis.size() * dim, dim);
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const Matrix ad = ad_matrix(rd.algebra(), basis[t]);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                stacked(t * dim + r, c) = ad(r, c);
            }
        }
    }
    const Subspace centralizer = kernel(stacked);
    const bool self_centralizing = centralizer == rd.toral().space();
    json details = {{"maximal", maximal},
                    {"toral_dim", rd.toral().dim()},
                    {"centralizer_dim", centralizer.dim()}};
    if (maximal != self_centralizing) {
        return failed("maximal-toral", "maximality disagrees with the centralizer computation", details, details);
    }
    return passed("maximal-toral", maximal ? "toral subalgebra is maximal" : "toral subalgebra is not maximal",
                  details);
}

CheckRecord suite_splitting(const SuiteContext& ctx)
{
    return from_check("splitting", splitting_elements_unique(*ctx.datum, ctx.sampling),
                      "h_alpha is independent of the chosen root vector for " +
                          std::to_string(ctx.datum->roots().size()) + " roots",
                      {{"samples", ctx.sampling.samples}, {"seed", ctx.sampling.seed}});
}

CheckRecord suite_bound(const SuiteContext& ctx)
{
    json details = json::object();
    if (ctx.datum) {
        if (auto c = pairing_bound_check(*ctx.datum)) {
            return failed("bound", c->message, to_json(*c));
        }
        details["lie_pairs"] = ctx.datum->roots().size() * ctx.datum->roots().size();
    }
    if (ctx.abstract) {
        const auto& rs = *ctx.abstract;
        for (const auto& a : rs.roots()) {
            for (const auto& b : rs.roots()) {
                const Rational p = rs.pairing(a, b);
                if (!is_integer(p) || p < -4 || p > 4) {
                    return failed("bound", "pairing " + to_string(p) + " outside Z n [-4, 4]",
                                  {{"alpha", to_json(a)}, {"beta", to_json(b)}, {"pairing", to_json(p)}});
                }
            }
        }
        details["abstract_pairs"] = rs.size() * rs.size();
    }
    return passed("bound", "all pairings are integers in [-4, 4]", details);
}

CheckRecord suite_killing(const SuiteContext& ctx)
{
    if (!semisimple_and_maximal(ctx)) {
        return skipped("killing", "needs a semisimple algebra with a maximal toral subalgebra");
    }
    return from_check("killing", killing_identities(*ctx.datum), "Killing form identities hold");
}

CheckRecord suite_theta(const SuiteContext& ctx)
{
    const auto& rd = *ctx.datum;
    if (!rd.all_integrable()) {
        return skipped("theta", "some root is not integrable");
    }
    const auto& algebra = rd.algebra();
    std::mt19937_64 rng(ctx.sampling.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_element = [&] {
        Element x(algebra.dim());
        for (auto& c : x) {
            c = coeff(rng);
        }
        return x;
    };
    constexpr std::size_t pairs = 20;
    for (const auto& a : rd.roots()) {
        Matrix theta;
        try {
            theta = theta_automorphism(rd, a);
        } catch (const InvariantViolation& e) {
            return failed("theta", e.what(), {{"alpha", to_json(a)}, {"message", e.what()}});
        }
        for (std::size_t p = 0; p < pairs; ++p) {
            const Element x = random_element();
            const Element y = random_element();
            if (theta.apply(algebra.bracket(x, y)) != algebra.bracket(theta.apply(x), theta.apply(y))) {
                return failed("theta", "theta_" + to_string(a) + " does not preserve a bracket",
                              {{"alpha", to_json(a)}, {"x", to_json(x)}, {"y", to_json(y)}});
            }
        }
    }
    return passed("theta",
                  "theta_alpha permutes root spaces and preserves brackets for " +
                      std::to_string(rd.roots().size()) + " roots",
                  {{"random_pairs_per_root", pairs}});
}

CheckRecord suite_chain(const SuiteContext& ctx)
{
    const auto [family, n] = *ctx.family;
    if (n <= family_minimum(family)) {
        return skipped("chain", "n must exceed " + std::to_string(family_minimum(family)));
    }
    const auto report = chain_check(family, n);
    json links = json::array();
    for (const auto& l : report.links) {
        links.push_back({{"n", l.n},
                         {"contained", l.contained},
                         {"coroots_compatible", l.coroots_compatible},
                         {"closed", l.closed},
                         {"irreducible", l.irreducible}});
    }
    json details = {{"links", links},
                    {"reducible_levels", report.reducible_levels},
                    {"union_matches_span", report.union_matches_span}};
    if (!report.pass()) {
        for (const auto& l : report.links) {
            if (!l.pass()) {
                return failed("chain", "level " + std::to_string(l.n) + " does not embed in the next",
                              {{"n", l.n}}, details);
            }
        }
        return failed("chain", "union of the chain is not the span-closed part of the top level",
                      {{"n_max", n}}, details);
    }
    return passed("chain", std::to_string(report.links.size()) + " embeddings up to " + to_string(family) + "_" +
                               std::to_string(n),
                  details);
}

CheckRecord suite_sdiv(const SuiteContext& ctx)
{
    const auto& rs = *ctx.abstract;
    const auto result = sdiv(rs);
    json details = {{"root_count", rs.size()},
                    {"sdiv_count", result.subsystem.members.size()},
                    {"reduced", result.reduced}};
    std::vector<Vector> coroots;
    for (const auto& a : result.subsystem.members) {
        coroots.push_back(rs.coroot(a));
    }
    const AbstractRootSystem sub(rs.rank(), result.subsystem.members, coroots,
                                 Subspace::span(rs.rank(), result.subsystem.members));
    if (auto v = check_axioms(sub)) {
        json witness = json::array();
        for (const auto& w : v->witness) {
            witness.push_back(to_json(w));
        }
        return failed("sdiv", "subsystem fails the axioms: " + v->message,
                      {{"clause", to_string(v->clause)}, {"roots", witness}}, details);
    }
    return passed("sdiv",
                  std::to_string(result.subsystem.members.size()) + " of " + std::to_string(rs.size()) +
                      " roots, reduced = " + (result.reduced ? "true" : "false"),
                  details);
}

CheckRecord suite_axioms(const SuiteContext& ctx)
{
    const auto& rs = *ctx.abstract;
    if (auto v = check_axioms(rs)) {
        json witness = json::array();
        for (const auto& w : v->witness) {
            witness.push_back(to_json(w));
        }
        return failed("axioms", v->message, {{"clause", to_string(v->clause)}, {"roots", witness}});
    }
    return passed("axioms", "root system axioms hold for " + std::to_string(rs.size()) + " roots",
                  {{"root_count", rs.size()}, {"rank", rs.rank()}});
}

enum class Needs { datum, abstract, either, datum_and_abstract, family };

struct Suite {
    std::string name;
    Needs needs;
    CheckRecord (*run)(const SuiteContext&);
};

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all = {
        {"axioms", Needs::abstract, suite_axioms},
        {"bound", Needs::either, suite_bound},
        {"chain", Needs::family, suite_chain},
        {"core", Needs::datum, suite_core},
        {"ideals", Needs::datum, suite_ideals},
        {"killing", Needs::datum, suite_killing},
        {"maximal-toral", Needs::datum, suite_maximal_toral},
        {"partial-sums", Needs::abstract, suite_partial_sums},
        {"root-strings", Needs::datum, suite_root_strings},
        {"sdiv", Needs::abstract, suite_sdiv},
        {"simple-ideals", Needs::datum, suite_simple_ideals},
        {"splitting", Needs::datum, suite_splitting},
        {"subalgebras", Needs::datum_and_abstract, suite_subalgebras},
        {"theta", Needs::datum, suite_theta},
    };
    return all;
}

CheckRecord run_suite(const Suite& suite, const SuiteContext& ctx)
{
    const bool has_datum = ctx.datum.has_value();
    const bool has_abstract = ctx.abstract.has_value();
    switch (suite.needs) {
    case Needs::datum:
        if (!has_datum) {
            return skipped(suite.name, ctx.datum_missing);
        }
        break;
    case Needs::abstract:
        if (!has_abstract) {
            return skipped(suite.name, ctx.abstract_missing);
        }
        break;
    case Needs::either:
        if (!has_datum && !has_abstract) {
            return skipped(suite.name, ctx.datum_missing);
        }
        break;
    case Needs::datum_and_abstract:
        if (!has_datum) {
            return skipped(suite.name, ctx.datum_missing);
        }
        if (!ctx.datum_abstract) {
            return skipped(suite.name, ctx.abstract_missing);
        }
        break;
    case Needs::family:
        if (!ctx.family) {
            return skipped(suite.name, "only available with --family");
        }
        break;
    }
    try {
        return suite.run(ctx);
    } catch (const InvariantViolation& e) {
        return failed(suite.name, e.what(), {{"message", e.what()}});
    } catch (const Error& e) {
        return skipped(suite.name, e.what());
    } catch (const std::exception& e) {
        return failed(suite.name, std::string("internal error: ") + e.what(), {{"message", e.what()}});
    }
}

std::vector<const Suite*> select_suites(const std::vector<std::string>& names)
{
    std::vector<const Suite*> out;
    if (names.empty()) {
        for (const auto& s : suites()) {
            out.push_back(&s);
        }
        return out;
    }
    for (const auto& s : suites()) {
        if (std::find(names.begin(), names.end(), s.name) != names.end()) {
            out.push_back(&s);
        }
    }
    for (const auto& n : names) {
        if (std::none_of(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == n; })) {
            std::string known;
            for (const auto& s : suites()) {
                known += (known.empty() ? "" : ", ") + s.name;
            }
            throw InputError("unknown suite '" + n + "' (known: " + known + ")");
        }
    }
    return out;
}

json sampling_json(SamplingOptions sampling)
{
    return {{"seed", sampling.seed}, {"samples", sampling.samples}};
}

json verify_parameters(const VerifyOptions& options, const std::vector<const Suite*>& selected)
{
    json params = sampling_json(options.sampling);
    json names = json::array();
    for (const auto* s : selected) {
        names.push_back(s->name);
    }
    params["suites"] = names;
    return params;
}

void run_selected(Report& report, const std::vector<const Suite*>& selected, const SuiteContext& ctx)
{
    for (const auto* s : selected) {
        report.records.push_back(run_suite(*s, ctx));
    }
}

Report file_report(const std::string& command, const LoadedFile& input)
{
    Report report;
    report.command = command;
    report.input_digest = input.digest;
    report.input = {{"file", input.path}, {"dim", input.file.dim}};
    return report;
}

std::shared_ptr<const LieAlgebra> build_algebra(const AlgebraFile& file)
{
    try {
        return file.algebra();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

void require_toral(const AlgebraFile& file)
{
    if (file.toral.empty()) {
        throw InputError("the algebra file has no 'toral' rows");
    }
}

}  // namespace

LoadedFile load_text(std::string path, std::string_view contents)
{
    try {
        auto file = parse_algebra_file(contents);
        return {std::move(path), content_digest(contents), std::move(file)};
    } catch (const ParseError& e) {
        throw InputError(path + ":" + e.what());
    }
}

LoadedFile load_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_text(path, buf.str());
}

Report cmd_validate(const LoadedFile& input)
{
    auto report = file_report("validate", input);
    report.records.push_back(jacobi_record(*build_algebra(input.file)));
    return report;
}

Report cmd_decompose(const LoadedFile& input)
{
    require_toral(input.file);
    auto report = file_report("decompose", input);
    const auto algebra = build_algebra(input.file);
    report.records.push_back(jacobi_record(*algebra));
    if (!report.ok()) {
        return report;
    }
    report.records.push_back(decompose(algebra, input.file.toral).record);
    return report;
}

Report cmd_admissible(const LoadedFile& input, SamplingOptions sampling)
{
    require_toral(input.file);
    auto report = file_report("admissible", input);
    report.parameters = sampling_json(sampling);
    const auto algebra = build_algebra(input.file);
    report.records.push_back(jacobi_record(*algebra));
    if (!report.ok()) {
        return report;
    }
    auto dec = decompose(algebra, input.file.toral);
    report.records.push_back(dec.record);
    if (dec.decomposition) {
        report.records.push_back(admissibility(*dec.decomposition, sampling).record);
    }
    return report;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) {
            out.push_back(s.name);
        }
        return out;
    }();
    return names;
}

Report cmd_verify(const LoadedFile& input, const VerifyOptions& options)
{
    require_toral(input.file);
    const auto selected = select_suites(options.suites);
    auto report = file_report("verify", input);
    report.parameters = verify_parameters(options, selected);
    const auto algebra = build_algebra(input.file);

    SuiteContext ctx;
    ctx.sampling = options.sampling;
    report.records.push_back(jacobi_record(*algebra));
    if (report.ok()) {
        auto dec = decompose(algebra, input.file.toral);
        report.records.push_back(dec.record);
        if (dec.decomposition) {
            auto adm = admissibility(*dec.decomposition, options.sampling);
            report.records.push_back(adm.record);
            ctx.datum = std::move(adm.datum);
        }
    }
    if (ctx.datum) {
        ctx.semisimple = is_semisimple(*algebra);
        try {
            ctx.abstract.emplace(extract_abstract(*ctx.datum));
            ctx.datum_abstract = ctx.abstract;
        } catch (const Error& e) {
            ctx.abstract_missing = std::string("no abstract root system: ") + e.what();
        }
    } else {
        ctx.datum_missing = "input is not an admissible pair";
        ctx.abstract_missing = ctx.datum_missing;
    }
    run_selected(report, selected, ctx);
    return report;
}

Report cmd_verify_family(RootFamily family, std::size_t n, const VerifyOptions& options)
{
    const auto selected = select_suites(options.suites);
    Report report;
    report.command = "verify";
    const std::string description = "family " + to_string(family) + " " + std::to_string(n);
    report.input_digest = content_digest(description);
    report.input = {{"family", to_string(family)}, {"n", n}};
    report.parameters = verify_parameters(options, selected);

    SuiteContext ctx;
    ctx.sampling = options.sampling;
    ctx.family = {family, n};
    try {
        ctx.abstract.emplace(family_truncation(family, n));
    } catch (const UnsupportedFamily& e) {
        throw InputError(e.what());
    }

    std::optional<std::pair<ClassicalFamily, std::size_t>> classical;
    switch (family) {
    case RootFamily::A:
        classical = {ClassicalFamily::sl, n + 1};
        break;
    case RootFamily::B:
        classical = {ClassicalFamily::so_odd, n};
        break;
    case RootFamily::C:
        classical = {ClassicalFamily::sp, n};
        break;
    case RootFamily::D:
        classical = {ClassicalFamily::so_even, n};
        break;
    case RootFamily::BC:
        break;
    }
    if (classical) {
        const auto algebra = build_classical(classical->first, classical->second);
        auto adm = admissibility(weight_decomposition(algebra.toral), options.sampling);
        report.records.push_back(adm.record);
        ctx.datum = std::move(adm.datum);
        ctx.semisimple = true;
        if (ctx.datum) {
            ctx.datum_abstract.emplace(extract_abstract(*ctx.datum));
        } else {
            ctx.datum_missing = "classical algebra is not admissible";
        }
    } else {
        ctx.datum_missing = "no Lie algebra is attached to " + to_string(family);
    }
    run_selected(report, selected, ctx);
    return report;
}

std::string render_text(const Report& report)
{
    std::ostringstream out;
    for (const auto& r : report.records) {
        out << to_string(r.status) << "  " << r.name << ": " << r.summary << "\n";
        if (r.name == "decomposition" && r.status == CheckStatus::pass) {
            for (const auto& w : r.details["weights"]) {
                std::string weight;
                for (const auto& c : w["weight"]) {
                    weight += (weight.empty() ? "" : ", ") + c.get<std::string>();
                }
                out << "        (" << weight << ")  dim " << w["dim"].get<std::size_t>() << "\n";
            }
        }
        if (r.status == CheckStatus::fail && !r.witness.is_null()) {
            out << "        witness: " << r.witness.dump() << "\n";
        }
    }
    out << "verdict: " << report.verdict() << "\n";
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact-arithmetic checks for Lie algebras with a toral subalgebra", "lietk"};
    app.require_subcommand(1);

    std::string path;
    std::string json_path;
    bool timing = false;
    SamplingOptions sampling;
    std::vector<std::string> suite_list;
    std::string family_name;
    std::size_t family_n = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", json_path, "Write the JSON report to this file ('-' for stdout)");
        sub->add_flag("--timing", timing, "Include wall-clock timing in the JSON report");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", sampling.seed, "Seed for random root-vector sampling")->capture_default_str();
        sub->add_option("--samples", sampling.samples, "Random combinations per root space")->capture_default_str();
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity");
    validate_cmd->add_option("file", path, "Algebra file")->required();
    add_common(validate_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Weight space decomposition under the toral rows");
    decompose_cmd->add_option("file", path, "Algebra file")->required();
    add_common(decompose_cmd);

    auto* admissible_cmd = app.add_subcommand("admissible", "Admissibility and root data");
    admissible_cmd->add_option("file", path, "Algebra file")->required();
    add_common(admissible_cmd);
    add_sampling(admissible_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    auto* file_opt = verify_cmd->add_option("file", path, "Algebra file");
    auto* family_opt = verify_cmd->add_option("--family", family_name, "Root system family")
                           ->check(CLI::IsMember({"A", "B", "C", "D", "BC"}));
    auto* n_opt = verify_cmd->add_option("--n", family_n, "Rank of the family truncation");
    family_opt->needs(n_opt);
    n_opt->needs(family_opt);
    file_opt->excludes(family_opt);
    verify_cmd->add_option("--suite", suite_list, "Suite to run (repeatable; default all)")
        ->check(CLI::IsMember(suite_names()));
    add_common(verify_cmd);
    add_sampling(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return exit_input_error;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (validate_cmd->parsed()) {
            report = cmd_validate(load_file(path));
        } else if (decompose_cmd->parsed()) {
            report = cmd_decompose(load_file(path));
        } else if (admissible_cmd->parsed()) {
            report = cmd_admissible(load_file(path), sampling);
        } else {
            VerifyOptions options{suite_list, sampling};
            if (!family_name.empty()) {
                report = cmd_verify_family(parse_root_family(family_name), family_n, options);
            } else if (!path.empty()) {
                report = cmd_verify(load_file(path), options);
            } else {
                throw InputError("verify needs a file or --family with --n");
            }
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    if (timing) {
        report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    if (json_path == "-") {
        out << to_json_text(report);
    } else {
        out << render_text(report);
        if (!json_path.empty()) {
            std::ofstream json_out(json_path, std::ios::binary);
            if (!json_out) {
                err << "error: cannot write '" << json_path << "'\n";
                return exit_input_error;
            }
            json_out << to_json_text(report);
        }
    }
    return report.ok() ? exit_ok : exit_check_failure;
}

}  // namespace lietk::cli
