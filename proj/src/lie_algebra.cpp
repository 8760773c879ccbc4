#include "lietk/lie_algebra.hpp"

#include "lietk/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lietk {

namespace {

std::vector<std::string> default_labels(std::size_t dim)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
        labels.push_back("b" + std::to_string(i));
    }
    return labels;
}

// [a_i, a_j] for each pair of basis vectors of `vectors`, in the ambient basis.
std::vector<Element> pairwise_brackets(const LieAlgebra& algebra, const std::vector<Element>& a,
                                       const std::vector<Element>& b)
{
    std::vector<Element> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Element z = algebra.bracket(x, y);
            if (!is_zero(z)) {
                out.push_back(std::move(z));
            }
        }
    }
    return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels,
                       const std::vector<BracketRecord>& brackets)
    : dim_(dim), labels_(labels.empty() ? default_labels(dim) : std::move(labels)),
      table_(dim * dim)
{
    if (dim == 0) {
        throw std::invalid_argument("Lie algebra dimension must be positive");
    }
    if (labels_.size() != dim) {
        throw std::invalid_argument("expected " + std::to_string(dim) + " basis labels, got " +
                                    std::to_string(labels_.size()));
    }
    std::vector<std::map<std::size_t, Rational>> accum(dim * dim);
    for (const auto& rec : brackets) {
        if (rec.i >= dim || rec.j >= dim || rec.k >= dim) {
            throw std::invalid_argument("bracket record index out of range: (" +
                                        std::to_string(rec.i) + ", " + std::to_string(rec.j) +
                                        ") -> " + std::to_string(rec.k));
        }
        if (rec.i >= rec.j) {
            throw std::invalid_argument("bracket record must have i < j, got (" +
                                        std::to_string(rec.i) + ", " + std::to_string(rec.j) + ")");
        }
        accum[rec.i * dim + rec.j][rec.k] += rec.coeff;
    }
    for (std::size_t slot = 0; slot < accum.size(); ++slot) {
        for (auto& [k, c] : accum[slot]) {
            if (sgn(c) != 0) {
                table_[slot].push_back({k, c});
            }
        }
    }
}

std::vector<BracketRecord> LieAlgebra::records() const
{
    std::vector<BracketRecord> out;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            for (const auto& t : terms(i, j)) {
                out.push_back({i, j, t.index, t.coeff});
            }
        }
    }
    return out;
}

void LieAlgebra::check_element(const Element& x) const
{
    if (x.size() != dim_) {
        throw DimensionMismatch("element of length " + std::to_string(x.size()) +
                                " in an algebra of dimension " + std::to_string(dim_));
    }
}

Element LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const
{
    Element out = zero();
    if (i == j) {
        return out;
    }
    const bool swapped = i > j;
    for (const auto& t : swapped ? terms(j, i) : terms(i, j)) {
        out[t.index] = swapped ? Rational(-t.coeff) : t.coeff;
    }
    return out;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const
{
    check_element(x);
    check_element(y);
    std::vector<std::size_t> nx;
    std::vector<std::size_t> ny;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) != 0) {
            nx.push_back(i);
        }
        if (sgn(y[i]) != 0) {
            ny.push_back(i);
        }
    }
    Element out = zero();
    for (auto i : nx) {
        for (auto j : ny) {
            if (i == j) {
                continue;
            }
            Rational c = x[i] * y[j];
            if (i > j) {
                c = -c;
            }
            for (const auto& t : i < j ? terms(i, j) : terms(j, i)) {
                out[t.index] += c * t.coeff;
            }
        }
    }
    return out;
}

std::optional<JacobiViolation> validate(const LieAlgebra& algebra)
{
    const std::size_t n = algebra.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ads.push_back(ad_matrix(algebra, algebra.basis_element(i)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Element bij = algebra.basis_bracket(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
                Element sum = ads[i].apply(algebra.basis_bracket(j, k));
                sum += ads[j].apply(algebra.basis_bracket(k, i));
                sum += ads[k].apply(bij);
                if (!is_zero(sum)) {
                    return JacobiViolation{i, j, k, std::move(sum)};
                }
            }
        }
    }
    return std::nullopt;
}

Matrix ad_matrix(const LieAlgebra& algebra, const Element& x)
{
    const std::size_t n = algebra.dim();
    if (x.size() != n) {
        throw DimensionMismatch("ad_matrix: element has wrong length");
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const bool swapped = i > j;
            for (const auto& t : swapped ? algebra.terms(j, i) : algebra.terms(i, j)) {
                Rational c = x[i] * t.coeff;
                m(t.index, j) += swapped ? Rational(-c) : c;
            }
        }
    }
    return m;
}

namespace {

Rational trace_of_product(const Matrix& a, const Matrix& b)
{
    Rational t(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) {
                t += a(i, k) * b(k, i);
            }
        }
    }
    return t;
}

}  // namespace

Rational killing_form(const LieAlgebra& algebra, const Element& x, const Element& y)
{
    return trace_of_product(ad_matrix(algebra, x), ad_matrix(algebra, y));
}

Matrix killing_matrix(const LieAlgebra& algebra)
{
    const std::size_t n = algebra.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) {
        ads.push_back(ad_matrix(algebra, algebra.basis_element(i)));
    }
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            gram(i, j) = trace_of_product(ads[i], ads[j]);
            gram(j, i) = gram(i, j);
        }
    }
    return gram;
}

Subspace centralizer_within(const LieAlgebra& algebra, const Subspace& s)
{
    // x = sum c_i s_i with [x, s_j] = 0 for all j: linear system in c.
    const std::size_t n = algebra.dim();
    const auto basis = s.basis_vectors();
    const std::size_t k = basis.size();
    if (k == 0) {
        return Subspace::zero(n);
    }
    Matrix system(n * k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Element z = algebra.bracket(basis[i], basis[j]);
            for (std::size_t r = 0; r < n; ++r) {
                system(j * n + r, i) = z[r];
            }
        }
    }
    const Subspace coeffs = kernel(system);
    std::vector<Element> out;
    for (std::size_t b = 0; b < coeffs.dim(); ++b) {
        const Vector c = coeffs.basis_vector(b);
        Element x = algebra.zero();
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(c[i]) != 0) {
                x += c[i] * basis[i];
            }
        }
        out.push_back(std::move(x));
    }
    return Subspace::span(n, out);
}

Subspace center(const LieAlgebra& algebra)
{
    return centralizer_within(algebra, Subspace::full(algebra.dim()));
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b)
{
    return Subspace::span(algebra.dim(),
                          pairwise_brackets(algebra, a.basis_vectors(), b.basis_vectors()));
}

Subspace derived_subalgebra(const LieAlgebra& algebra)
{
    const auto full = Subspace::full(algebra.dim());
    return bracket_span(algebra, full, full);
}

Subspace killing_radical(const LieAlgebra& algebra)
{
    return kernel(killing_matrix(algebra));
}

bool is_semisimple(const LieAlgebra& algebra)
{
    return killing_radical(algebra).is_zero();
}

bool is_subalgebra(const LieAlgebra& algebra, const Subspace& s)
{
    return s.contains(bracket_span(algebra, s, s));
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s)
{
    return s.contains(bracket_span(algebra, Subspace::full(algebra.dim()), s));
}

Subspace generated_subalgebra(const LieAlgebra& algebra, const std::vector<Element>& generators)
{
    Subspace current = Subspace::span(algebra.dim(), generators);
    while (true) {
        Subspace next = current + bracket_span(algebra, current, current);
        if (next.dim() == current.dim()) {
            return current;
        }
        current = std::move(next);
    }
}

bool is_ad_nilpotent(const LieAlgebra& algebra, const Element& x)
{
    const Matrix ad = ad_matrix(algebra, x);
    Matrix power = ad;
    for (std::size_t k = 1; k < algebra.dim(); ++k) {
        if (power.is_zero()) {
            return true;
        }
        power = power * ad;
    }
    return power.is_zero();
}

Matrix exp_ad(const LieAlgebra& algebra, const Element& x)
{
    if (!is_ad_nilpotent(algebra, x)) {
        throw NotNilpotent("exp_ad: ad of " + to_string(x) + " is not nilpotent");
    }
    const Matrix ad = ad_matrix(algebra, x);
    Matrix result = Matrix::identity(algebra.dim());
    Matrix term = Matrix::identity(algebra.dim());
    for (std::size_t k = 1; k <= algebra.dim(); ++k) {
        term = Rational(1, static_cast<unsigned long>(k)) * (term * ad);
        if (term.is_zero()) {
            break;
        }
        result = result + term;
    }
    return result;
}

LieAlgebra restrict_to(const LieAlgebra& algebra, const std::vector<Element>& basis,
                       std::vector<std::string> labels)
{
    const BasisCoordinates coords(algebra.dim(), basis);
    std::vector<BracketRecord> records;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Element z = algebra.bracket(basis[i], basis[j]);
            auto c = coords.coordinates(z);
            if (!c) {
                throw PreconditionError("restrict_to: span is not closed under the bracket");
            }
            for (std::size_t k = 0; k < c->size(); ++k) {
                if (sgn((*c)[k]) != 0) {
                    records.push_back({i, j, k, (*c)[k]});
                }
            }
        }
    }
    return LieAlgebra(basis.size(), std::move(labels), records);
}

LieAlgebra quotient(const LieAlgebra& algebra, const std::vector<Element>& complement,
                    const Subspace& ideal)
{
    std::vector<Element> combined = complement;
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        combined.push_back(ideal.basis_vector(i));
    }
    const BasisCoordinates coords(algebra.dim(), combined);
    std::vector<BracketRecord> records;
    for (std::size_t i = 0; i < complement.size(); ++i) {
        for (std::size_t j = i + 1; j < complement.size(); ++j) {
            auto c = coords.coordinates(algebra.bracket(complement[i], complement[j]));
            if (!c) {
                throw PreconditionError("quotient: bracket leaves complement + ideal");
            }
            for (std::size_t k = 0; k < complement.size(); ++k) {
                if (sgn((*c)[k]) != 0) {
                    records.push_back({i, j, k, (*c)[k]});
                }
            }
        }
    }
    return LieAlgebra(complement.size(), {}, records);
}

LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second)
{
    const std::size_t offset = first.dim();
    std::vector<std::string> labels = first.labels();
    labels.insert(labels.end(), second.labels().begin(), second.labels().end());
    std::vector<BracketRecord> records = first.records();
    for (auto rec : second.records()) {
        rec.i += offset;
        rec.j += offset;
        rec.k += offset;
        records.push_back(rec);
    }
    // Keep labels unique when both summands use the same names.
    std::map<std::string, int> seen;
    for (const auto& l : labels) {
        ++seen[l];
    }
    if (std::any_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second > 1; })) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            labels[i] += i < offset ? "'1" : "'2";
        }
    }
    return LieAlgebra(first.dim() + second.dim(), std::move(labels), records);
}

LieAlgebra abelian(std::size_t dim)
{
    return LieAlgebra(dim, {}, {});
}

}  // namespace lietk
