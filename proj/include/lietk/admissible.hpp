#pragma once

#include "lietk/classical.hpp"
#include "lietk/toral.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace lietk {

/// (e, h, f) with [e,f] = h, [h,e] = 2e, [h,f] = -2f, e in L_root, f in
/// L_{-root}, h toral and root(h) = 2.
struct Sl2Triple {
    Element e;
    Element h;
    Element f;
    Weight root;
};

/// Controls the randomized strengthening of the per-vector checks: besides
/// every basis vector of a root space, `samples` random nonzero integer
/// combinations are tried, drawn from a generator seeded with `seed`.
struct SamplingOptions {
    std::size_t samples = 5;
    std::uint64_t seed = 0;
};

/// Solves the linear problem y in L_{-alpha}, [x,y] in h, alpha([x,y]) = 2 and
/// re-verifies the full triple. Returns nullopt when no such y exists.
std::optional<Sl2Triple> find_sl2_triple(const WeightDecomposition& d, const Weight& alpha,
                                         const Element& x);

/// Root data of an admissible pair: splitting elements h_alpha, the triple
/// each was taken from, and integrability flags. Produced by is_admissible.
class RootDatum {
public:
    RootDatum(WeightDecomposition decomposition, std::map<Weight, Sl2Triple> triples,
              std::map<Weight, bool> integrable);

    const WeightDecomposition& decomposition() const { return decomposition_; }
    const LieAlgebra& algebra() const { return decomposition_.algebra(); }
    const ToralSubalgebra& toral() const { return decomposition_.toral(); }
    const std::vector<Weight>& roots() const { return decomposition_.roots(); }
    bool is_root(const Weight& w) const { return decomposition_.is_root(w); }
    bool is_root_or_zero(const Weight& w) const { return decomposition_.is_root_or_zero(w); }

    const Sl2Triple& triple(const Weight& alpha) const;
    const Element& splitting_element(const Weight& alpha) const { return triple(alpha).h; }
    /// Coordinates of h_alpha against the toral basis.
    const Vector& splitting_coords(const Weight& alpha) const;
    bool integrable(const Weight& alpha) const;
    bool all_integrable() const;

    /// beta(h_alpha)
    Rational pairing(const Weight& beta, const Weight& alpha) const;
    /// s_alpha(beta) = beta - beta(h_alpha) alpha
    Weight reflect(const Weight& alpha, const Weight& beta) const;

private:
    WeightDecomposition decomposition_;
    std::map<Weight, Sl2Triple> triples_;
    std::map<Weight, Vector> splitting_coords_;
    std::map<Weight, bool> integrable_;
};

enum class AdmissibilityClause {
    empty_root_set,         // no nonzero weights
    toral_not_in_brackets,  // h is not inside sum of [L_a, L_-a]
    no_sl2_triple,          // some root vector has no partner
};

std::string to_string(AdmissibilityClause clause);

struct AdmissibilityFailure {
    AdmissibilityClause clause;
    std::optional<Weight> root;
    /// Root vector without a partner, or a toral direction missing from the
    /// bracket span (orthogonal to h intersected with that span).
    std::optional<Element> vector;
    std::string message;
};

using AdmissibilityResult = std::variant<RootDatum, AdmissibilityFailure>;

AdmissibilityResult is_admissible(const WeightDecomposition& d, SamplingOptions sampling = {});

/// Failure witness of a property check.
struct Counterexample {
    std::string check;
    std::vector<Weight> roots;
    std::vector<Vector> values;
    std::string message;
};

/// nullopt means the check passed.
using CheckResult = std::optional<Counterexample>;

/// Every feasible partner of every sampled x in L_alpha yields the same
/// h_alpha, and h_alpha lies in span{h_b1, h_b2} whenever alpha lies in
/// span{b1, b2} (and in the span of the splitting elements of a basis of R).
CheckResult splitting_elements_unique(const RootDatum& rd, SamplingOptions sampling = {});

/// kappa(h_b, h_b) != 0, b(t) kappa(h_b, h_b) = 2 kappa(t, h_b) for toral basis t,
/// span{h_b} = h. Throws PreconditionError unless the algebra is semisimple
/// and h is maximal toral.
CheckResult killing_identities(const RootDatum& rd);

/// Sorted k with beta + k alpha in R u {0}. Throws InvariantViolation if the
/// result is not an interval or beta - beta(h_alpha) alpha is not a root.
std::vector<long> root_string(const RootDatum& rd, const Weight& beta, const Weight& alpha);

/// Integrality, reflection closure, string intervals, sign rule and the
/// nonvanishing of [e_alpha, L_beta] when alpha + beta is a root.
CheckResult root_string_properties(const RootDatum& rd);

/// {k : k alpha in R} is within {+-1, +-1/2, +-2} for every root.
CheckResult scaled_root_check(const RootDatum& rd);

/// beta(h_alpha) is an integer in [-4, 4] for every pair.
CheckResult pairing_bound_check(const RootDatum& rd);

struct IdealRootSubset {
    Subspace ideal;
    std::vector<Weight> roots;  // R_I, sorted
};

/// R_I = {alpha : I meets L_alpha}. Throws NotAnIdeal, or InvariantViolation
/// if R_I is not symmetric and closed or I != (I n L_0) + sum_{R_I} L_alpha.
IdealRootSubset ideal_root_subset(const RootDatum& rd, const Subspace& ideal);

/// J = sum_{a in D} [L_a, L_-a] + sum_{a in D} L_a for D = R \ R_I, checked to
/// be an ideal with L = I + J and I n J central. Throws PreconditionError
/// unless L_0 = sum_a [L_a, L_-a].
Subspace complement_ideal(const RootDatum& rd, const IdealRootSubset& iis);

struct Core {
    Subspace core_space;      // L_c = L_00 + sum L_a
    Subspace center_of_core;  // Z(L_c)
    std::vector<Element> complement;  // basis of the chosen complement of Z(L_c) in L_c
    std::shared_ptr<const LieAlgebra> centerless;  // L_c / Z(L_c) on `complement`
    bool centerless_semisimple;
};

/// Throws PreconditionError if some root is not integrable.
Core core(const RootDatum& rd);

struct RootSubalgebra {
    Subspace space;        // L_Delta inside L
    Subspace toral_space;  // h_Delta = h n sum_{Delta} [L_a, L_-a]
    AlgebraWithToral sub;  // L_Delta with h_Delta, on the echelon basis of `space`
    std::map<Weight, Weight> restriction;  // Delta u {0} -> weights of h_Delta
    RootDatum datum;
};

/// L_Delta with its toral subalgebra h_Delta. Throws PreconditionError if
/// Delta is empty, not inside R, not symmetric or not closed; throws
/// InvariantViolation if restriction is not injective, the pair is not
/// admissible, or its roots are not exactly the restrictions of Delta.
RootSubalgebra sub_from_roots(const RootDatum& rd, const std::vector<Weight>& delta,
                              SamplingOptions sampling = {});

/// Classes of the relation alpha ~ beta if beta(h_alpha) != 0, ordered by their
/// smallest root.
std::vector<std::vector<Weight>> connected_root_classes(const RootDatum& rd);

struct SimpleIdeal {
    Subspace ideal;
    std::vector<Weight> roots;
    Subspace toral_part;  // h n ideal
};

/// One ideal per connected class of roots; checked to be ideals with pairwise
/// zero brackets that add up to L, and h = sum of the toral parts. Throws
/// PreconditionError unless L is semisimple and h maximal toral.
std::vector<SimpleIdeal> simple_ideal_decomposition(const RootDatum& rd);

/// L_0 == h. Throws PreconditionError unless the algebra is semisimple. The
/// decomposition overload also covers toral subalgebras that are not admissible.
bool is_maximal_toral(const RootDatum& rd);
bool is_maximal_toral(const WeightDecomposition& d);

/// exp(ad e) exp(ad -f) exp(ad e) for alpha's triple, checked to send L_beta
/// onto L_{s_alpha(beta)} for every root beta.
Matrix theta_automorphism(const RootDatum& rd, const Weight& alpha);

/// Roots whose space meets the subalgebra generated by L_{+-m}, m in M.
std::vector<Weight> generated_root_support(const RootDatum& rd, const std::vector<Weight>& m);

/// Symmetric: -a in S for a in S. Closed: (S + S) n R inside S.
bool is_symmetric(const std::vector<Weight>& subset);
bool is_closed(const RootDatum& rd, const std::vector<Weight>& subset);

}  // namespace lietk
