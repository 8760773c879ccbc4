#pragma once

#include "lietk/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lietk {

/// Coordinates of an element against the algebra's basis.
using Element = Vector;

/// One structure constant record: [b_i, b_j] has coefficient `coeff` on b_k.
struct BracketRecord {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational coeff;
};

/// Finite-dimensional Lie algebra given by a sparse structure-constant table.
/// Only brackets with i < j are stored; [b_j, b_i] = -[b_i, b_j] and
/// [b_i, b_i] = 0 are implied, so antisymmetry cannot be violated. The Jacobi
/// identity is not checked on construction; call validate().
class LieAlgebra {
public:
    struct Term {
        std::size_t index;
        Rational coeff;
    };

    /// Throws std::invalid_argument on a zero dimension, a label count
    /// mismatch, an out-of-range index or a record with i >= j. Repeated
    /// (i, j, k) records are summed.
    LieAlgebra(std::size_t dim, std::vector<std::string> labels,
               const std::vector<BracketRecord>& brackets);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Stored terms of [b_i, b_j] for i < j.
    const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    /// All nonzero records, ordered by (i, j, k).
    std::vector<BracketRecord> records() const;

    Element basis_element(std::size_t i) const { return unit_vector(dim_, i); }
    Element basis_bracket(std::size_t i, std::size_t j) const;
    Element bracket(const Element& x, const Element& y) const;

    Element zero() const { return zero_vector(dim_); }

private:
    void check_element(const Element& x) const;

    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Term>> table_;
};

struct JacobiViolation {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Element residual;
};

/// Checks the Jacobi identity on all basis triples i < j < k and returns the
/// first violating triple, if any.
std::optional<JacobiViolation> validate(const LieAlgebra& algebra);

/// Column j is [x, b_j].
Matrix ad_matrix(const LieAlgebra& algebra, const Element& x);

/// tr(ad_x ad_y)
Rational killing_form(const LieAlgebra& algebra, const Element& x, const Element& y);

/// Gram matrix of the Killing form on the basis.
Matrix killing_matrix(const LieAlgebra& algebra);

Subspace center(const LieAlgebra& algebra);
Subspace derived_subalgebra(const LieAlgebra& algebra);
Subspace killing_radical(const LieAlgebra& algebra);
bool is_semisimple(const LieAlgebra& algebra);

/// {x in s : [x, s] = 0}
Subspace centralizer_within(const LieAlgebra& algebra, const Subspace& s);

/// [a, b] = span of brackets of basis vectors.
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

bool is_subalgebra(const LieAlgebra& algebra, const Subspace& s);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);

/// Smallest subalgebra containing the given vectors.
Subspace generated_subalgebra(const LieAlgebra& algebra, const std::vector<Element>& generators);

bool is_ad_nilpotent(const LieAlgebra& algebra, const Element& x);

/// exp(ad_x) = sum_k ad_x^k / k!; throws NotNilpotent unless ad_x is nilpotent.
Matrix exp_ad(const LieAlgebra& algebra, const Element& x);

/// Structure constants of a subalgebra against an ordered basis of it.
/// Throws PreconditionError if the span is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& algebra, const std::vector<Element>& basis,
                       std::vector<std::string> labels = {});

/// Quotient (span(complement) + ideal) / ideal realized on the complement
/// vectors: each bracket [c_i, c_j] is written in the combined basis and its
/// ideal part dropped. Throws PreconditionError if a bracket leaves the span.
LieAlgebra quotient(const LieAlgebra& algebra, const std::vector<Element>& complement,
                    const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second);

/// Lie algebra with all brackets zero.
LieAlgebra abelian(std::size_t dim);

}  // namespace lietk
