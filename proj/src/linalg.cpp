#include "lietk/linalg.hpp"

#include "lietk/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lietk {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(const Vector& entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                                    std::to_string(rows[r].size()) + ", expected " +
                                    std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        m.set_column(c, columns[c]);
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    if (v.size() != rows_) {
        throw DimensionMismatch("column length mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational Matrix::trace() const
{
    if (rows_ != cols_) {
        throw DimensionMismatch("trace of a non-square matrix");
    }
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_) {
        throw DimensionMismatch("matrix-vector size mismatch");
    }
    Vector out(rows_, Rational(0));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0) {
            continue;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) {
                out[r] += a * v[c];
            }
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product size mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) != 0) {
                    out(i, j) += aik * bkj;
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrix sum size mismatch");
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + Rational(-1) * b;
}

Matrix operator*(const Rational& s, const Matrix& m)
{
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = s * m(i, j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; pivots are searched only in the first pivot_limit columns.
Echelon echelon(Matrix m, std::size_t pivot_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) {
            ++sel;
        }
        if (sel == m.rows()) {
            continue;
        }
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m(sel, c), m(row, c));
            }
        }
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (sgn(m(row, c)) != 0) {
                m(row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) {
                continue;
            }
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (sgn(m(row, c)) != 0) {
                    m(r, c) -= factor * m(row, c);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

Matrix top_rows(const Matrix& m, std::size_t count)
{
    Matrix out(count, m.cols());
    for (std::size_t r = 0; r < count; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

}  // namespace

Matrix rref(const Matrix& m)
{
    return echelon(m, m.cols()).reduced;
}

std::size_t rank(const Matrix& m)
{
    return echelon(m, m.cols()).pivots.size();
}

Subspace kernel(const Matrix& m)
{
    const std::size_t n = m.cols();
    auto [reduced, pivots] = echelon(m, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector x = zero_vector(n);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            x[pivots[i]] = -reduced(i, free);
        }
        vectors.push_back(std::move(x));
    }
    return Subspace::span(n, vectors);
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b)
{
    if (a.rows() != b.size()) {
        throw DimensionMismatch("solve_affine: " + std::to_string(a.rows()) + " rows but " +
                                std::to_string(b.size()) + " right-hand entries");
    }
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n) = b[r];
    }
    auto [reduced, pivots] = echelon(std::move(aug), n);
    for (std::size_t r = pivots.size(); r < reduced.rows(); ++r) {
        if (sgn(reduced(r, n)) != 0) {
            return std::nullopt;
        }
    }
    Vector particular = zero_vector(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        particular[pivots[i]] = reduced(i, n);
    }
    return AffineSolution{std::move(particular), kernel(a)};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, Matrix echelon_rows)
    : ambient_dim_(ambient_dim), basis_(std::move(echelon_rows))
{
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (sgn(basis_(r, c)) == 0) {
            ++c;
        }
        pivots_.push_back(c);
    }
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
    return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m)
{
    auto [reduced, pivots] = echelon(m, m.cols());
    return Subspace(m.cols(), top_rows(reduced, pivots.size()));
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(basis_.row(i));
    }
    return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const
{
    if (v.size() != ambient_dim_) {
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                " in ambient dimension " + std::to_string(ambient_dim_));
    }
    Vector coords(dim());
    Vector residual = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        coords[i] = v[pivots_[i]];
        if (sgn(coords[i]) == 0) {
            continue;
        }
        for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c) {
            if (sgn(basis_(i, c)) != 0) {
                residual[c] -= coords[i] * basis_(i, c);
            }
        }
    }
    if (!lietk::is_zero(residual)) {
        return std::nullopt;
    }
    return coords;
}

bool Subspace::contains(const Vector& v) const
{
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dim_ != ambient_dim_) {
        throw DimensionMismatch("subspaces of different ambient dimension");
    }
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_vector(i))) {
            return false;
        }
    }
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch("sum of subspaces of different ambient dimension");
    }
    auto vectors = a.basis_vectors();
    auto more = b.basis_vectors();
    vectors.insert(vectors.end(), more.begin(), more.end());
    return Subspace::span(a.ambient_dim(), vectors);
}

Subspace annihilator(const Subspace& s)
{
    return kernel(s.basis());
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch("intersection of subspaces of different ambient dimension");
    }
    const Subspace& big = a.dim() >= b.dim() ? a : b;
    const Subspace& small = a.dim() >= b.dim() ? b : a;
    if (small.is_zero()) {
        return small;
    }
    // Residuals modulo the echelon basis of `big` are linear in the vector, so
    // sum c_j s_j lies in big exactly when sum c_j r_j = 0.
    const auto& pivots = big.pivots();
    const std::size_t n = a.ambient_dim();
    Matrix residuals(n, small.dim());
    for (std::size_t j = 0; j < small.dim(); ++j) {
        Vector r = small.basis_vector(j);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Rational c = r[pivots[i]];
            if (sgn(c) != 0) {
                const Vector row = big.basis_vector(i);
                for (std::size_t t = 0; t < n; ++t) {
                    r[t] -= c * row[t];
                }
            }
        }
        residuals.set_column(j, r);
    }
    const Subspace combos = kernel(residuals);
    std::vector<Vector> vectors;
    for (std::size_t k = 0; k < combos.dim(); ++k) {
        const Vector c = combos.basis_vector(k);
        Vector v = zero_vector(n);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (sgn(c[j]) != 0) {
                v += c[j] * small.basis_vector(j);
            }
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::span(n, vectors);
}

Subspace image(const Matrix& m, const Subspace& s)
{
    if (m.cols() != s.ambient_dim()) {
        throw DimensionMismatch("image: matrix/subspace size mismatch");
    }
    std::vector<Vector> vectors;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        vectors.push_back(m.apply(s.basis_vector(i)));
    }
    return Subspace::span(m.rows(), vectors);
}

// ---------------------------------------------------------------------------
// BasisCoordinates

BasisCoordinates::BasisCoordinates(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis))
{
    const std::size_t k = basis_.size();
    Matrix aug(k, ambient_dim_ + k);
    for (std::size_t i = 0; i < k; ++i) {
        if (basis_[i].size() != ambient_dim_) {
            throw DimensionMismatch("basis vector of wrong length");
        }
        for (std::size_t c = 0; c < ambient_dim_; ++c) {
            aug(i, c) = basis_[i][c];
        }
        aug(i, ambient_dim_ + i) = 1;
    }
    auto [reduced, pivots] = echelon(std::move(aug), ambient_dim_);
    if (pivots.size() != k) {
        throw PreconditionError("basis vectors are linearly dependent");
    }
    // row p of the echelon form equals sum_i T(p,i) basis_i, so
    // v = sum_p v[pivot_p] row_p gives coordinate i = sum_p v[pivot_p] T(p,i)
    projector_ = Matrix(k, ambient_dim_);
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t i = 0; i < k; ++i) {
            projector_(i, pivots[p]) = reduced(p, ambient_dim_ + i);
        }
    }
}

std::optional<Vector> BasisCoordinates::coordinates(const Vector& v) const
{
    Vector c = projector_.apply(v);
    if (combine(c) != v) {
        return std::nullopt;
    }
    return c;
}

Vector BasisCoordinates::combine(const Vector& coords) const
{
    if (coords.size() != basis_.size()) {
        throw DimensionMismatch("coordinate vector of wrong length");
    }
    Vector out = zero_vector(ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (sgn(coords[i]) != 0) {
            out += coords[i] * basis_[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials and eigenvalues

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

Poly derivative(const Poly& p)
{
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        d.push_back(Rational(static_cast<long>(i)) * p[i]);
    }
    trim(d);
    return d;
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> divmod(Poly num, const Poly& den)
{
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    trim(num);
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        const Rational factor = num.back() / den.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) {
            num[shift + i] -= factor * den[i];
        }
        trim(num);
    }
    trim(q);
    return {q, num};
}

Poly gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational evaluate(const Poly& p, const Rational& x)
{
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> out{mpz_class(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t existing = out.size();
        mpz_class power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < existing; ++i) {
                out.push_back(out[i] * power);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix h = m;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t sel = j + 1;
        while (sel < n && sgn(h(sel, j)) == 0) {
            ++sel;
        }
        if (sel == n) {
            continue;
        }
        if (sel != j + 1) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(h(sel, c), h(j + 1, c));
            }
            for (std::size_t r = 0; r < n; ++r) {
                std::swap(h(r, sel), h(r, j + 1));
            }
        }
        for (std::size_t k = j + 2; k < n; ++k) {
            if (sgn(h(k, j)) == 0) {
                continue;
            }
            const Rational u = h(k, j) / h(j + 1, j);
            for (std::size_t c = 0; c < n; ++c) {
                h(k, c) -= u * h(j + 1, c);
            }
            for (std::size_t r = 0; r < n; ++r) {
                h(r, j + 1) += u * h(r, k);
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{i,m} (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<Poly> p(n + 1);
    p[0] = Poly{Rational(1)};
    for (std::size_t mi = 1; mi <= n; ++mi) {
        const std::size_t col = mi - 1;
        Poly next(mi + 1, Rational(0));
        for (std::size_t d = 0; d < p[mi - 1].size(); ++d) {
            next[d + 1] += p[mi - 1][d];
            next[d] -= h(col, col) * p[mi - 1][d];
        }
        Rational prod(1);
        for (std::size_t i = mi - 1; i-- > 0;) {
            prod *= h(i + 1, i);
            if (sgn(prod) == 0) {
                break;
            }
            const Rational coeff = h(i, col) * prod;
            if (sgn(coeff) == 0) {
                continue;
            }
            for (std::size_t d = 0; d < p[i].size(); ++d) {
                next[d] -= coeff * p[i][d];
            }
        }
        p[mi] = std::move(next);
    }
    return p[n];
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly)
{
    Poly p = poly;
    trim(p);
    if (p.empty()) {
        throw std::invalid_argument("rational_roots of the zero polynomial");
    }
    std::vector<Rational> roots;
    if (p.size() == 1) {
        return roots;
    }
    // Square-free part: distinct roots only.
    Poly g = gcd(p, derivative(p));
    p = divmod(p, g).first;
    if (sgn(p[0]) == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    if (p.size() > 1) {
        mpz_class lcm_den = 1;
        for (const auto& c : p) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
        }
        std::vector<mpz_class> ints;
        mpz_class content = 0;
        for (const auto& c : p) {
            Rational scaled = c * lcm_den;
            ints.push_back(scaled.get_num());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
        }
        const auto num_divs = divisors(ints.front() / content);
        const auto den_divs = divisors(ints.back() / content);
        for (const auto& a : num_divs) {
            for (const auto& b : den_divs) {
                mpz_class g2;
                mpz_gcd(g2.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g2 != 1) {
                    continue;
                }
                for (int sign : {1, -1}) {
                    Rational candidate(a * sign, b);
                    candidate.canonicalize();
                    if (sgn(evaluate(p, candidate)) == 0) {
                        roots.push_back(candidate);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Eigenspace> simultaneous_eigenspaces(std::size_t dim, std::span<const Matrix> ops)
{
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].rows() != dim || ops[i].cols() != dim) {
            throw DimensionMismatch("operator " + std::to_string(i) + " is not " +
                                    std::to_string(dim) + "x" + std::to_string(dim));
        }
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (ops[i] * ops[j] != ops[j] * ops[i]) {
                throw NotCommuting(i, j);
            }
        }
    }

    std::vector<Eigenspace> current{{Vector{}, Subspace::full(dim)}};
    for (std::size_t op_index = 0; op_index < ops.size(); ++op_index) {
        const Matrix& op = ops[op_index];
        std::vector<Eigenspace> refined;
        for (const auto& piece : current) {
            const std::size_t k = piece.space.dim();
            // Matrix of op restricted to the (invariant) piece, in its echelon basis.
            Matrix restricted(k, k);
            for (std::size_t c = 0; c < k; ++c) {
                auto coords = piece.space.coordinates(op.apply(piece.space.basis_vector(c)));
                if (!coords) {
                    throw NotSplit("operator " + std::to_string(op_index) +
                                   " does not preserve a common eigenspace");
                }
                restricted.set_column(c, *coords);
            }
            std::size_t covered = 0;
            for (const auto& lambda : rational_roots(characteristic_polynomial(restricted))) {
                Subspace local = kernel(restricted - lambda * Matrix::identity(k));
                std::vector<Vector> vectors;
                for (std::size_t i = 0; i < local.dim(); ++i) {
                    const Vector c = local.basis_vector(i);
                    Vector v = zero_vector(dim);
                    for (std::size_t b = 0; b < k; ++b) {
                        if (sgn(c[b]) != 0) {
                            v += c[b] * piece.space.basis_vector(b);
                        }
                    }
                    vectors.push_back(std::move(v));
                }
                covered += local.dim();
                Vector tuple = piece.eigenvalues;
                tuple.push_back(lambda);
                refined.push_back({std::move(tuple), Subspace::span(dim, vectors)});
            }
            if (covered != k) {
                throw NotSplit("operator " + std::to_string(op_index) +
                               " is not diagonalizable over the rationals (eigenspaces cover " +
                               std::to_string(covered) + " of " + std::to_string(k) +
                               " dimensions)");
            }
        }
        current = std::move(refined);
    }
    std::sort(current.begin(), current.end(), [](const Eigenspace& a, const Eigenspace& b) {
        return compare(a.eigenvalues, b.eigenvalues) < 0;
    });
    return current;
}

}  // namespace lietk
