#include "support.hpp"

#include "lietk/admissible.hpp"
#include "lietk/classical.hpp"
#include "lietk/errors.hpp"

#include <doctest.h>

using namespace lietk;
using namespace lietk::test;

namespace {

Weight w(std::initializer_list<long> values)
{
    Vector v;
    for (long x : values) {
        v.emplace_back(x);
    }
    return Weight{v};
}

RootDatum datum_of(const ToralSubalgebra& toral, SamplingOptions sampling = {})
{
    auto result = is_admissible(weight_decomposition(toral), sampling);
    if (auto* failure = std::get_if<AdmissibilityFailure>(&result)) {
        FAIL("not admissible: " << failure->message);
    }
    return std::get<RootDatum>(std::move(result));
}

RootDatum datum_of(ClassicalFamily family, std::size_t n)
{
    return datum_of(build_classical(family, n).toral);
}

// Root datum built directly from triples on the first basis vector of each
// root space, for pairs that are not admissible as a whole.
RootDatum manual_datum(const ToralSubalgebra& toral)
{
    const auto d = weight_decomposition(toral);
    std::map<Weight, Sl2Triple> triples;
    std::map<Weight, bool> integrable;
    for (const auto& a : d.roots()) {
        auto t = find_sl2_triple(d, a, d.space(a).basis_vector(0));
        REQUIRE(t);
        integrable[a] = is_ad_nilpotent(d.algebra(), t->e) && is_ad_nilpotent(d.algebra(), t->f);
        triples.emplace(a, std::move(*t));
    }
    return RootDatum(d, std::move(triples), std::move(integrable));
}

// Same datum with every splitting element multiplied by `scale`: a broken
// datum for negative controls.
RootDatum scaled_datum(const RootDatum& rd, long scale)
{
    std::map<Weight, Sl2Triple> triples;
    std::map<Weight, bool> integrable;
    for (const auto& a : rd.roots()) {
        auto t = rd.triple(a);
        t.h = Rational(scale) * t.h;
        triples.emplace(a, t);
        integrable[a] = true;
    }
    return RootDatum(rd.decomposition(), std::move(triples), std::move(integrable));
}

AlgebraWithToral sum_of(std::initializer_list<std::size_t> sl_sizes)
{
    std::optional<AlgebraWithToral> out;
    for (auto n : sl_sizes) {
        const auto part = build_classical(ClassicalFamily::sl, n);
        const AlgebraWithToral piece{part.algebra, part.toral};
        out = out ? direct_sum(*out, piece) : piece;
    }
    return *out;
}

}  // namespace

TEST_CASE("sl2 triples")
{
    const auto sl2 = build_classical(ClassicalFamily::sl, 2);
    const auto d = weight_decomposition(sl2.toral);
    const auto t = find_sl2_triple(d, w({2}), {1, 0, 0});
    REQUIRE(t);
    CHECK(t->f == Vector{0, 1, 0});
    CHECK(t->h == Vector{0, 0, 1});

    const auto scaled = find_sl2_triple(d, w({2}), {3, 0, 0});
    REQUIRE(scaled);
    CHECK(scaled->f == Vector{0, ratio(1, 3), 0});
    CHECK(scaled->h == Vector{0, 0, 1});

    CHECK_THROWS_AS(find_sl2_triple(d, w({4}), {1, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(find_sl2_triple(d, w({2}), {0, 1, 0}), PreconditionError);
    CHECK_THROWS_AS(find_sl2_triple(d, w({2}), {0, 0, 0}), PreconditionError);
}

TEST_CASE("sl3 triple through E12")
{
    const auto sl3 = build_classical(ClassicalFamily::sl, 3);
    const auto d = weight_decomposition(sl3.toral);
    const auto& l = *sl3.algebra;
    REQUIRE(l.labels()[0] == "E12");
    REQUIRE(l.labels()[2] == "E21");
    REQUIRE(l.labels()[6] == "H1");
    const auto t = find_sl2_triple(d, w({2, -1}), l.basis_element(0));
    REQUIRE(t);
    CHECK(t->f == l.basis_element(2));
    CHECK(t->h == l.basis_element(6));
}

TEST_CASE("classical algebras are admissible")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const auto rd = datum_of(ClassicalFamily::sl, n);
        CHECK(rd.roots().size() == n * (n - 1));
        CHECK(rd.all_integrable());
    }
    for (auto family : {ClassicalFamily::so_odd, ClassicalFamily::sp, ClassicalFamily::so_even}) {
        const auto rd = datum_of(family, 2);
        CHECK(rd.all_integrable());
    }
}

TEST_CASE("admissibility failures carry witnesses")
{
    const auto gl2 = build_classical(ClassicalFamily::gl, 2);
    auto result = is_admissible(weight_decomposition(gl2.toral));
    REQUIRE(std::holds_alternative<AdmissibilityFailure>(result));
    const auto& failure = std::get<AdmissibilityFailure>(result);
    CHECK(failure.clause == AdmissibilityClause::toral_not_in_brackets);
    REQUIRE(failure.vector);
    CHECK(gl2.toral.space().contains(*failure.vector));
    CHECK(center(*gl2.algebra).contains(*failure.vector));

    const auto ab = abelian_with_toral(3);
    result = is_admissible(weight_decomposition(ab.toral));
    REQUIRE(std::holds_alternative<AdmissibilityFailure>(result));
    CHECK(std::get<AdmissibilityFailure>(result).clause == AdmissibilityClause::empty_root_set);

    // sl3 over span{H1}: weight 1 vectors have no partner with [x, y] in span{H1}.
    const auto sl3 = build_classical(ClassicalFamily::sl, 3);
    result = is_admissible(weight_decomposition(ToralSubalgebra(sl3.algebra, {sl3.toral.chosen_basis()[0]})));
    REQUIRE(std::holds_alternative<AdmissibilityFailure>(result));
    const auto& f3 = std::get<AdmissibilityFailure>(result);
    CHECK(f3.clause == AdmissibilityClause::no_sl2_triple);
    REQUIRE(f3.root);
    CHECK((*f3.root == w({1}) || *f3.root == w({-1})));

    CHECK(to_string(AdmissibilityClause::empty_root_set) == "empty-root-set");
    CHECK(to_string(AdmissibilityClause::toral_not_in_brackets) == "toral-not-in-bracket-span");
    CHECK(to_string(AdmissibilityClause::no_sl2_triple) == "no-sl2-triple");
}

TEST_CASE("splitting elements")
{
    const auto rd = datum_of(ClassicalFamily::sl, 3);
    const auto a1 = w({2, -1});
    const auto a2 = w({-1, 2});
    CHECK(rd.splitting_coords(a1) == Vector{1, 0});
    CHECK(rd.splitting_coords(a2) == Vector{0, 1});
    CHECK(rd.splitting_coords(a1 + a2) == rd.splitting_coords(a1) + rd.splitting_coords(a2));
    CHECK(rd.splitting_coords(-a1) == Vector{-1, 0});
    CHECK(rd.pairing(a2, a1) == -1);
    CHECK(rd.pairing(a1, a1) == 2);
    CHECK(rd.reflect(a1, a2) == a1 + a2);
    CHECK_FALSE(splitting_elements_unique(rd, {5, 0}));
    CHECK_FALSE(splitting_elements_unique(datum_of(ClassicalFamily::so_odd, 2), {5, 7}));
}

TEST_CASE("splitting elements do not depend on the seed")
{
    const auto sl4 = build_classical(ClassicalFamily::sl, 4);
    const auto base = datum_of(sl4.toral);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto rd = datum_of(sl4.toral, {3, seed});
        for (const auto& a : rd.roots()) {
            CHECK(rd.splitting_coords(a) == base.splitting_coords(a));
        }
    }
}

TEST_CASE("Killing identities")
{
    CHECK_FALSE(killing_identities(datum_of(ClassicalFamily::sl, 3)));
    CHECK_FALSE(killing_identities(datum_of(ClassicalFamily::sp, 2)));
    const auto sum = sum_of({2, 3});
    CHECK_FALSE(killing_identities(datum_of(sum.toral)));

    // sl2: kappa(h, h) = 8 and alpha(h) kappa(h, h) = 2 kappa(h, h).
    const auto rd = datum_of(ClassicalFamily::sl, 2);
    const auto& h = rd.splitting_element(w({2}));
    CHECK(killing_form(rd.algebra(), h, h) == 8);

    const auto gl2 = build_classical(ClassicalFamily::gl, 2);
    CHECK_THROWS_AS(killing_identities(manual_datum(gl2.toral)), PreconditionError);
}

TEST_CASE("root strings")
{
    const auto sl2 = datum_of(ClassicalFamily::sl, 2);
    CHECK(root_string(sl2, w({2}), w({2})) == std::vector<long>{-2, -1, 0});
    CHECK(root_string(sl2, w({-2}), w({2})) == std::vector<long>{0, 1, 2});

    const auto sl3 = datum_of(ClassicalFamily::sl, 3);
    const auto a1 = w({2, -1});
    const auto a2 = w({-1, 2});
    CHECK(root_string(sl3, a1, a2) == std::vector<long>{0, 1});
    CHECK(root_string(sl3, a1 + a2, a2) == std::vector<long>{-1, 0});

    // B2: long root beta, short root alpha with beta(h_alpha) = -2 has a string of length 3.
    const auto so5 = datum_of(ClassicalFamily::so_odd, 2);
    bool found_long_string = false;
    for (const auto& b : so5.roots()) {
        for (const auto& a : so5.roots()) {
            const auto s = root_string(so5, b, a);
            for (std::size_t i = 1; i < s.size(); ++i) {
                CHECK(s[i] == s[i - 1] + 1);
            }
            CHECK(std::find(s.begin(), s.end(), 0) != s.end());
            found_long_string = found_long_string || (b != a && b != -a && s.size() == 3);
        }
    }
    CHECK(found_long_string);

    for (auto family : {ClassicalFamily::sl, ClassicalFamily::so_odd, ClassicalFamily::sp, ClassicalFamily::so_even}) {
        const auto rd = datum_of(family, family == ClassicalFamily::sl ? 4 : 3);
        CHECK_FALSE(root_string_properties(rd));
        CHECK_FALSE(scaled_root_check(rd));
        CHECK_FALSE(pairing_bound_check(rd));
    }
}

TEST_CASE("broken splitting elements are caught")
{
    const auto sl2 = datum_of(ClassicalFamily::sl, 2);
    // h_alpha doubled: alpha(h_alpha) = 4, so s_alpha(alpha) = -3 alpha is not a root.
    CHECK(root_string_properties(scaled_datum(sl2, 2)));
    // Tripled: the pairing 6 is outside [-4, 4].
    const auto tripled = pairing_bound_check(scaled_datum(sl2, 3));
    REQUIRE(tripled);
    CHECK(tripled->check == "pairing-bound");
    CHECK_FALSE(pairing_bound_check(scaled_datum(sl2, 2)));
}

TEST_CASE("ideals and complements")
{
    const auto sum = sum_of({2, 3});
    const auto rd = datum_of(sum.toral);
    std::vector<Vector> first;
    for (std::size_t i = 0; i < 3; ++i) {
        first.push_back(sum.algebra->basis_element(i));
    }
    const auto sl2_block = Subspace::span(11, first);
    const auto iis = ideal_root_subset(rd, sl2_block);
    CHECK(iis.roots == std::vector<Weight>{w({-2, 0, 0}), w({2, 0, 0})});
    const auto j = complement_ideal(rd, iis);
    CHECK(j.dim() == 8);
    CHECK((j + sl2_block) == Subspace::full(11));
    CHECK(intersect(j, sl2_block).is_zero());

    const auto zero = ideal_root_subset(rd, Subspace::zero(11));
    CHECK(zero.roots.empty());
    CHECK(complement_ideal(rd, zero) == Subspace::full(11));

    const auto whole = ideal_root_subset(rd, Subspace::full(11));
    CHECK(whole.roots == rd.roots());
    CHECK(complement_ideal(rd, whole).is_zero());

    CHECK_THROWS_AS(ideal_root_subset(rd, rd.toral().space()), NotAnIdeal);
}

TEST_CASE("cores")
{
    // gl3: core is sl3, centerless and semisimple.
    const auto gl3 = build_classical(ClassicalFamily::gl, 3);
    const auto c = core(manual_datum(gl3.toral));
    CHECK(c.core_space == derived_subalgebra(*gl3.algebra));
    CHECK(c.center_of_core.is_zero());
    CHECK(c.centerless->dim() == 8);
    CHECK(c.centerless_semisimple);

    // sl2 + abelian line: the line drops out of the core.
    const auto sl2 = build_classical(ClassicalFamily::sl, 2);
    const auto mixed = direct_sum(AlgebraWithToral{sl2.algebra, sl2.toral}, abelian_with_toral(1));
    const auto rd = manual_datum(mixed.toral);
    CHECK(std::holds_alternative<AdmissibilityFailure>(is_admissible(rd.decomposition())));
    const auto c2 = core(rd);
    CHECK(c2.core_space.dim() == 3);
    CHECK(c2.centerless_semisimple);

    const auto c3 = core(datum_of(ClassicalFamily::sl, 3));
    CHECK(c3.core_space == Subspace::full(8));
    CHECK(c3.centerless->dim() == 8);
}

TEST_CASE("root subalgebras")
{
    const auto rd = datum_of(ClassicalFamily::sl, 3);
    const auto a1 = w({2, -1});
    const auto a2 = w({-1, 2});
    const auto small = sub_from_roots(rd, {a1, -a1});
    CHECK(small.space.dim() == 3);
    CHECK(small.toral_space.dim() == 1);
    CHECK(small.datum.roots().size() == 2);
    CHECK(small.restriction.at(a1) == w({2}));
    CHECK_FALSE(validate(*small.sub.algebra));

    const auto all = sub_from_roots(rd, rd.roots());
    CHECK(all.space == Subspace::full(8));
    CHECK(all.datum.roots().size() == 6);

    CHECK_THROWS_AS(sub_from_roots(rd, {}), PreconditionError);
    CHECK_THROWS_AS(sub_from_roots(rd, {a1}), PreconditionError);
    CHECK_THROWS_AS(sub_from_roots(rd, {a1, -a1, a2, -a2}), PreconditionError);
    CHECK_THROWS_AS(sub_from_roots(rd, {w({4, -2}), w({-4, 2})}), PreconditionError);

    CHECK(is_symmetric({a1, -a1}));
    CHECK_FALSE(is_symmetric({a1}));
    CHECK(is_closed(rd, {a1, -a1}));
    CHECK_FALSE(is_closed(rd, {a1, a2}));
    CHECK(generated_root_support(rd, {a1, a2}).size() == 6);
    CHECK(generated_root_support(rd, {a1}) == std::vector<Weight>{-a1, a1});
}

TEST_CASE("root subalgebras of sl4 over closures of pairs")
{
    const auto rd = datum_of(ClassicalFamily::sl, 4);
    const auto& roots = rd.roots();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i; j < roots.size(); j += 3) {
            const auto delta = generated_root_support(rd, {roots[i], roots[j]});
            CHECK(is_symmetric(delta));
            CHECK(is_closed(rd, delta));
            const auto sub = sub_from_roots(rd, delta);
            CHECK(sub.datum.roots().size() == delta.size());
        }
    }
}

TEST_CASE("simple ideals")
{
    CHECK(simple_ideal_decomposition(datum_of(sum_of({2, 3}).toral)).size() == 2);
    CHECK(simple_ideal_decomposition(datum_of(ClassicalFamily::sl, 4)).size() == 1);
    const auto triple = sum_of({2, 2, 2});
    const auto rd = datum_of(triple.toral);
    const auto ideals = simple_ideal_decomposition(rd);
    REQUIRE(ideals.size() == 3);
    CHECK(connected_root_classes(rd).size() == 3);
    Subspace toral_sum = Subspace::zero(9);
    for (const auto& i : ideals) {
        CHECK(i.ideal.dim() == 3);
        CHECK(i.roots.size() == 2);
        toral_sum = toral_sum + i.toral_part;
    }
    CHECK(toral_sum == rd.toral().space());

    const auto sizes = simple_ideal_decomposition(datum_of(sum_of({2, 3}).toral));
    CHECK(sizes[0].ideal.dim() + sizes[1].ideal.dim() == 11);
    CHECK(std::min(sizes[0].ideal.dim(), sizes[1].ideal.dim()) == 3);
}

TEST_CASE("maximal toral subalgebras")
{
    CHECK(is_maximal_toral(datum_of(ClassicalFamily::sl, 2)));
    CHECK(is_maximal_toral(datum_of(ClassicalFamily::sl, 3)));
    CHECK(is_maximal_toral(datum_of(ClassicalFamily::so_even, 3)));
    const auto sl3 = build_classical(ClassicalFamily::sl, 3);
    CHECK_FALSE(is_maximal_toral(weight_decomposition(ToralSubalgebra(sl3.algebra, {sl3.toral.chosen_basis()[0]}))));
    const auto gl2 = build_classical(ClassicalFamily::gl, 2);
    CHECK_THROWS_AS(is_maximal_toral(weight_decomposition(gl2.toral)), PreconditionError);
}

TEST_CASE("reflection automorphisms")
{
    const auto sl2 = datum_of(ClassicalFamily::sl, 2);
    const Matrix t2 = theta_automorphism(sl2, w({2}));
    CHECK(t2.apply({0, 0, 1}) == Vector{0, 0, -1});
    CHECK(Subspace::span(3, {t2.apply({1, 0, 0})}) == Subspace::span(3, {{0, 1, 0}}));

    const auto sl3 = datum_of(ClassicalFamily::sl, 3);
    const auto a1 = w({2, -1});
    const auto a2 = w({-1, 2});
    const Matrix t3 = theta_automorphism(sl3, a1);
    const auto image = Subspace::span(8, {t3.apply(sl3.decomposition().space(a2).basis_vector(0))});
    CHECK(image == sl3.decomposition().space(a1 + a2));

    // Random pairs are preserved by every theta.
    Gen gen(41);
    const auto so5 = datum_of(ClassicalFamily::so_odd, 2);
    const auto& l = so5.algebra();
    for (const auto& a : so5.roots()) {
        const Matrix t = theta_automorphism(so5, a);
        for (int trial = 0; trial < 3; ++trial) {
            const auto x = gen.vector(l.dim());
            const auto y = gen.vector(l.dim());
            CHECK(t.apply(l.bracket(x, y)) == l.bracket(t.apply(x), t.apply(y)));
        }
        // theta^2 preserves each root space.
        for (const auto& b : so5.roots()) {
            const auto& space = so5.decomposition().space(b);
            CHECK(space.contains((t * t).apply(space.basis_vector(0))));
        }
    }
}
