#pragma once

#include "lietk/toral.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lietk {

enum class ClassicalFamily { gl, sl, so_odd, so_even, sp };

ClassicalFamily parse_classical_family(std::string_view name);
std::string to_string(ClassicalFamily family);

/// An algebra together with a marked toral subalgebra.
struct AlgebraWithToral {
    std::shared_ptr<const LieAlgebra> algebra;
    ToralSubalgebra toral;
};

/// Matrix algebra with its defining matrices; basis element i is matrices[i].
struct ClassicalAlgebra : AlgebraWithToral {
    ClassicalFamily family;
    std::size_t n;
    std::size_t matrix_size;
    std::vector<Matrix> matrices;
};

/// Classical matrix algebras with documented bases. `n` is the matrix size
/// for gl and sl, and the rank for the others:
///   gl(n)      E_ij in lexicographic order; toral = span{E_ii}
///   sl(n)      off-diagonal E_ij (lexicographic), then H_i = E_ii - E_{i+1,i+1}
///   so_odd(n)  so(2n+1) preserving x_0^2 + 2 sum x_i x_{n+i}
///   so_even(n) so(2n) preserving 2 sum x_i x_{n+i}          (n >= 2)
///   sp(n)      sp(2n) preserving sum x_i y_{n+i} - x_{n+i} y_i
/// For so/sp the root vectors X_ij, Y_ij, Z_ij (and U_i, V_i for so_odd) come
/// first, followed by H_i = E_ii - E_{n+i,n+i}; the toral subalgebra is
/// span{H_i} with that basis. Throws UnsupportedFamily for n out of range.
ClassicalAlgebra build_classical(ClassicalFamily family, std::size_t n);

/// Structure constants of the span of the given (independent) matrices, which
/// must be closed under the commutator.
LieAlgebra algebra_from_matrices(const std::vector<Matrix>& matrices, std::vector<std::string> labels);

/// Direct sum with the toral subalgebras placed blockwise.
AlgebraWithToral direct_sum(const AlgebraWithToral& first, const AlgebraWithToral& second);

/// Abelian algebra of the given dimension, toral subalgebra = everything.
AlgebraWithToral abelian_with_toral(std::size_t dim);

}  // namespace lietk
