#pragma once

#include "lietk/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lietk {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& entries);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;
    Rational trace() const;

    Vector apply(const Vector& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

/// Reduced row-echelon form; zero rows are moved to the bottom.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of Q^n stored by its canonical (reduced echelon) basis, so two
/// subspaces are equal as sets exactly when their bases are identical.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }

    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v against the echelon basis, or nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient_dim, Matrix echelon);

    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0} as a subspace of Q^cols.
Subspace kernel(const Matrix& m);

/// Solution set of a x = b: particular + kernel.
struct AffineSolution {
    Vector particular;
    Subspace kernel;
};

/// Returns one solution (free variables set to zero) and the homogeneous
/// solution space, or std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {v : <v, u> = 0 for all u in s} under the standard pairing.
Subspace annihilator(const Subspace& s);

/// Image of s under m (m must have s.ambient_dim() columns).
Subspace image(const Matrix& m, const Subspace& s);

/// Coordinates against an arbitrary ordered basis of linearly independent vectors.
class BasisCoordinates {
public:
    BasisCoordinates() = default;
    BasisCoordinates(std::size_t ambient_dim, std::vector<Vector> basis);

    std::size_t size() const { return basis_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<Vector>& basis() const { return basis_; }

    std::optional<Vector> coordinates(const Vector& v) const;

    /// Linear map sending each vector of the span to its coordinates
    /// (size() x ambient_dim()). Only meaningful on the span.
    const Matrix& projector() const { return projector_; }

    Vector combine(const Vector& coords) const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    Matrix projector_;
};

/// Coefficients (constant term first) of det(x I - m).
std::vector<Rational> characteristic_polynomial(const Matrix& m);

/// Distinct rational roots of a polynomial given by coefficients (constant term
/// first), in increasing order.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

struct Eigenspace {
    Vector eigenvalues;  // one per operator, in input order
    Subspace space;
};

/// Common eigenspace splitting of a commuting family of dim x dim operators.
/// Throws NotCommuting for a non-commuting pair and NotSplit if the common
/// eigenspaces do not fill the ambient space. The result is ordered by
/// eigenvalue tuple.
std::vector<Eigenspace> simultaneous_eigenspaces(std::size_t dim, std::span<const Matrix> ops);

}  // namespace lietk
