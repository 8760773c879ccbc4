#pragma once

#include "lietk/classical.hpp"
#include "lietk/linalg.hpp"

#include <random>

namespace lietk::test {

/// Seeded source for the hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 9)
    {
        return ratio(integer(-bound, bound), integer(1, bound));
    }

    Vector vector(std::size_t n, long bound = 3)
    {
        Vector v(n);
        for (auto& c : v) {
            c = integer(-bound, bound);
        }
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, long bound = 3)
    {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = integer(-bound, bound);
            }
        }
        return m;
    }

    /// Low-rank matrices hit the harder echelon cases more often.
    Matrix matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t rank)
    {
        return matrix(rows, rank) * matrix(rank, cols);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// sl2 from its textbook table in the basis (e, f, h).
inline LieAlgebra sl2_table()
{
    return LieAlgebra(3, {"e", "f", "h"}, {{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}});
}

/// Determinant by cofactor expansion; independent of the elimination code.
inline Rational cofactor_det(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m(0, c)) == 0) {
            continue;
        }
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0, out = 0; k < n; ++k) {
                if (k != c) {
                    minor(r - 1, out++) = m(r, k);
                }
            }
        }
        const Rational term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

/// Coordinates of a matrix against basis matrices, via a flattened solve.
inline Vector matrix_coordinates(const std::vector<Matrix>& basis, const Matrix& m)
{
    const std::size_t entries = m.rows() * m.cols();
    Matrix a(entries, basis.size());
    Vector b(entries);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t e = 0; e < entries; ++e) {
            a(e, k) = basis[k](e / m.cols(), e % m.cols());
        }
    }
    for (std::size_t e = 0; e < entries; ++e) {
        b[e] = m(e / m.cols(), e % m.cols());
    }
    auto sol = solve_affine(a, b);
    return sol ? sol->particular : Vector{};
}

inline Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

}  // namespace lietk::test
