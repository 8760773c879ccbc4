#pragma once

#include "lietk/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lietk {

class RootDatum;

/// Finite set of rational vectors with a coroot covector per root. The
/// system lives in `space()`, a subspace of Q^rank (all of Q^rank unless
/// stated otherwise, e.g. the sum-zero hyperplane for type A). Construction
/// does not check the axioms; see check_axioms.
class AbstractRootSystem {
public:
    AbstractRootSystem(std::size_t rank, std::vector<Vector> roots, std::vector<Vector> coroots,
                       std::optional<Subspace> space = std::nullopt);

    std::size_t rank() const { return rank_; }
    const Subspace& space() const { return space_; }
    /// Sorted lexicographically.
    const std::vector<Vector>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }

    bool contains(const Vector& v) const { return index_of(v).has_value(); }
    std::optional<std::size_t> index_of(const Vector& v) const;

    /// Coroot of a root; throws PreconditionError for a non-root.
    const Vector& coroot(const Vector& alpha) const;
    const Vector& coroot_at(std::size_t i) const { return coroots_[i]; }

    /// alpha-check(v)
    Rational pairing(const Vector& alpha, const Vector& v) const { return dot(coroot(alpha), v); }

private:
    std::size_t rank_;
    Subspace space_;
    std::vector<Vector> roots_;
    std::vector<Vector> coroots_;
};

enum class AxiomClause {
    duplicate_root,
    zero_root,
    not_spanning,
    coroot_normalization,  // alpha-check(alpha) != 2
    reflection,            // s_alpha(beta) not a root
    integrality,           // alpha-check(beta) not an integer
};

std::string to_string(AxiomClause clause);

struct AxiomViolation {
    AxiomClause clause;
    std::vector<Vector> witness;  // the offending root(s)
    std::string message;
};

/// Zero not a root, roots span space(), alpha-check(alpha) = 2, reflection
/// closure and integrality, checked in that order. Returns the first violation.
std::optional<AxiomViolation> check_axioms(const AbstractRootSystem& rs);

/// beta - alpha-check(beta) alpha; throws PreconditionError if alpha is not a root.
Vector reflect(const AbstractRootSystem& rs, const Vector& alpha, const Vector& beta);

/// Classes of the relation alpha-check(beta) != 0, ordered by smallest member.
/// Each class is checked to be a closed subsystem.
std::vector<std::vector<Vector>> connected_components(const AbstractRootSystem& rs);

bool is_closed_subset(const AbstractRootSystem& rs, const std::vector<Vector>& subset);
bool is_symmetric_subset(const std::vector<Vector>& subset);
bool is_subsystem(const AbstractRootSystem& rs, const std::vector<Vector>& subset);

/// Smallest symmetric subset containing m that is closed under sums landing in
/// R. Checked to be symmetric, closed and reflection-stable. Sorted.
std::vector<Vector> closure_delta_m(const AbstractRootSystem& rs, const std::vector<Vector>& m);

/// An ordering of the summands whose prefix sums all lie in R u {0}, as a
/// permutation of indices, or nullopt if none exists. Throws
/// PreconditionError unless the summands add up to beta.
std::optional<std::vector<std::size_t>> partial_sum_witness(const AbstractRootSystem& rs,
                                                            const std::vector<Vector>& summands,
                                                            const Vector& beta);

/// Multisets of 1..max_k roots whose sum is a root, each checked with
/// partial_sum_witness. Multisets are enumerated in order until `exhaustive_cap`
/// instances have been checked; after that `samples` further instances are
/// drawn at random from a generator seeded with `seed`.
struct PartialSumSweep {
    std::size_t exhaustive = 0;
    std::size_t sampled = 0;
    std::size_t misses = 0;
    bool enumeration_complete = false;
    std::vector<Vector> first_miss;  // summands of the first miss
};

PartialSumSweep partial_sum_sweep(const AbstractRootSystem& rs, std::size_t max_k, std::size_t exhaustive_cap,
                                  std::size_t samples, std::uint64_t seed);

struct CartanSolution {
    Vector coords;  // x with sum_i a_j-check(a_i) x_i = a_j-check(eta)
    bool in_span;   // eta == sum_i x_i a_i
};

/// Throws PreconditionError when the pairing matrix of `base` is singular.
/// When eta lies in span(base) the solution is checked to reproduce it.
CartanSolution cartan_solve(const AbstractRootSystem& rs, const std::vector<Vector>& base,
                            const Vector& eta);

/// Counts supporting the finiteness of R n span(base): every root in the span
/// has pairing vector in Z^n n [-4, 4]^n, and solving over that box recovers
/// exactly the roots in the span.
struct FinitenessCertificate {
    std::size_t roots_in_span = 0;
    std::size_t box_solutions_in_roots = 0;
    bool pairings_bounded = true;
    bool holds() const { return pairings_bounded && roots_in_span == box_solutions_in_roots; }
};

FinitenessCertificate span_finiteness_certificate(const AbstractRootSystem& rs,
                                                  const std::vector<Vector>& base);

struct Subsystem {
    std::vector<Vector> members;
};

struct SdivResult {
    Subsystem subsystem;  // roots alpha with 2 alpha not a root
    bool reduced;
};

SdivResult sdiv(const AbstractRootSystem& rs);

/// Roots positive for a generic functional that are not sums of two positive
/// roots, sorted.
std::vector<Vector> simple_roots(const AbstractRootSystem& rs);

/// (a_i-check(a_j)) for the given ordered base.
Matrix cartan_matrix(const AbstractRootSystem& rs, const std::vector<Vector>& base);

struct ComponentFingerprint {
    std::size_t size;
    /// Roots alpha with beta-check(alpha) = 2 alpha-check(beta) != 0 for some
    /// beta, i.e. strictly shorter than some root. Separates B_n from C_n,
    /// whose Cartan matrices are transposes of each other.
    std::size_t short_roots;
    std::vector<Rational> cartan_entries;  // sorted

    friend auto operator<=>(const ComponentFingerprint&, const ComponentFingerprint&) = default;
};

/// Root count, component count and per-component invariants. Equal
/// fingerprints are used as the isomorphism test.
struct RootSystemFingerprint {
    std::size_t root_count;
    std::size_t component_count;
    std::vector<ComponentFingerprint> components;

    friend bool operator==(const RootSystemFingerprint&, const RootSystemFingerprint&) = default;
};

RootSystemFingerprint fingerprint(const AbstractRootSystem& rs);

enum class RootFamily { A, B, C, D, BC };

RootFamily parse_root_family(std::string_view name);
std::string to_string(RootFamily family);
std::size_t family_minimum(RootFamily family);

/// Standard coordinate realization with coroots 2a/(a,a):
/// A_n in Q^{n+1} (space = sum-zero hyperplane), the others in Q^n.
AbstractRootSystem family_truncation(RootFamily family, std::size_t n);

/// Zero-padding of a root of the level-n truncation into level n+1 coordinates.
Vector embed_truncation(RootFamily family, std::size_t n, const Vector& v);

struct ChainLink {
    std::size_t n;  // R_n inside R_{n+1}
    bool contained = false;
    bool coroots_compatible = false;
    bool closed = false;
    bool irreducible = false;
    bool pass() const { return contained && coroots_compatible && closed && irreducible; }
};

struct ChainReport {
    RootFamily family;
    std::size_t n_max;
    std::vector<std::size_t> reducible_levels;  // skipped at the bottom of the chain
    std::vector<ChainLink> links;
    bool union_matches_span = false;
    bool pass() const;
};

/// Embeds each truncation into the next for n < n_max. Reducible truncations at
/// the bottom (D_2) are reported and the chain resumes at the first irreducible
/// level. Throws PreconditionError if n_max <= family minimum.
ChainReport chain_check(RootFamily family, std::size_t n_max);

/// Roots as vectors of values on the toral basis, coroots from the splitting
/// elements (alpha-check(beta) = beta(h_alpha)). Throws InvariantViolation if
/// the axioms fail.
AbstractRootSystem extract_abstract(const RootDatum& rd);

}  // namespace lietk
