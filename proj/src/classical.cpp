#include "lietk/classical.hpp"

#include "lietk/errors.hpp"

namespace lietk {

namespace {

Matrix elementary(std::size_t size, std::size_t r, std::size_t c)
{
    Matrix m(size, size);
    m(r, c) = 1;
    return m;
}

std::string index_label(char prefix, std::size_t i, std::size_t j, std::size_t n)
{
    if (n < 10) {
        return prefix + std::to_string(i + 1) + std::to_string(j + 1);
    }
    return prefix + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::string index_label(char prefix, std::size_t i)
{
    return prefix + std::to_string(i + 1);
}

Vector flatten(const Matrix& m)
{
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            v.push_back(m(r, c));
        }
    }
    return v;
}

struct MatrixBasis {
    std::size_t size;
    std::vector<Matrix> matrices;
    std::vector<std::string> labels;
    std::size_t cartan_begin;  // matrices[cartan_begin..] span the toral subalgebra

    void add(Matrix m, std::string label)
    {
        matrices.push_back(std::move(m));
        labels.push_back(std::move(label));
    }
};

// so/sp share the block layout: `a` indexes the first n coordinates, `b` the
// last n, and sign = -1 for so (antisymmetric pieces), +1 for sp.
void add_block_root_vectors(MatrixBasis& basis, std::size_t n, std::size_t a0, std::size_t b0,
                            bool symplectic)
{
    const std::size_t size = basis.size;
    const Rational sign = symplectic ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                basis.add(elementary(size, a0 + i, a0 + j) - elementary(size, b0 + j, b0 + i),
                          index_label('X', i, j, n));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = symplectic ? i : i + 1; j < n; ++j) {
            Matrix m = elementary(size, a0 + i, b0 + j);
            if (i != j) {
                m = m + sign * elementary(size, a0 + j, b0 + i);
            }
            basis.add(std::move(m), index_label('Y', i, j, n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = symplectic ? i : i + 1; j < n; ++j) {
            Matrix m = elementary(size, b0 + i, a0 + j);
            if (i != j) {
                m = m + sign * elementary(size, b0 + j, a0 + i);
            }
            basis.add(std::move(m), index_label('Z', i, j, n));
        }
    }
}

void add_block_cartan(MatrixBasis& basis, std::size_t n, std::size_t a0, std::size_t b0)
{
    basis.cartan_begin = basis.matrices.size();
    for (std::size_t i = 0; i < n; ++i) {
        basis.add(elementary(basis.size, a0 + i, a0 + i) - elementary(basis.size, b0 + i, b0 + i),
                  index_label('H', i));
    }
}

MatrixBasis classical_basis(ClassicalFamily family, std::size_t n)
{
    MatrixBasis basis{};
    switch (family) {
    case ClassicalFamily::gl:
        if (n < 1) {
            throw UnsupportedFamily("gl(n) needs n >= 1");
        }
        basis.size = n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                basis.add(elementary(n, i, j), index_label('E', i, j, n));
            }
        }
        // The toral basis is picked out separately for gl (diagonal E_ii).
        basis.cartan_begin = basis.matrices.size();
        break;
    case ClassicalFamily::sl:
        if (n < 2) {
            throw UnsupportedFamily("sl(n) needs n >= 2");
        }
        basis.size = n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    basis.add(elementary(n, i, j), index_label('E', i, j, n));
                }
            }
        }
        basis.cartan_begin = basis.matrices.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            basis.add(elementary(n, i, i) - elementary(n, i + 1, i + 1), index_label('H', i));
        }
        break;
    case ClassicalFamily::so_odd:
        if (n < 1) {
            throw UnsupportedFamily("so(2n+1) needs n >= 1");
        }
        basis.size = 2 * n + 1;
        add_block_root_vectors(basis, n, 1, n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            basis.add(elementary(basis.size, 1 + i, 0) - elementary(basis.size, 0, 1 + n + i),
                      index_label('U', i));
        }
        for (std::size_t i = 0; i < n; ++i) {
            basis.add(elementary(basis.size, 1 + n + i, 0) - elementary(basis.size, 0, 1 + i),
                      index_label('V', i));
        }
        add_block_cartan(basis, n, 1, n + 1);
        break;
    case ClassicalFamily::so_even:
        if (n < 2) {
            throw UnsupportedFamily("so(2n) needs n >= 2");
        }
        basis.size = 2 * n;
        add_block_root_vectors(basis, n, 0, n, false);
        add_block_cartan(basis, n, 0, n);
        break;
    case ClassicalFamily::sp:
        if (n < 1) {
            throw UnsupportedFamily("sp(2n) needs n >= 1");
        }
        basis.size = 2 * n;
        add_block_root_vectors(basis, n, 0, n, true);
        add_block_cartan(basis, n, 0, n);
        break;
    }
    return basis;
}

}  // namespace

ClassicalFamily parse_classical_family(std::string_view name)
{
    if (name == "gl") {
        return ClassicalFamily::gl;
    }
    if (name == "sl") {
        return ClassicalFamily::sl;
    }
    if (name == "so_odd") {
        return ClassicalFamily::so_odd;
    }
    if (name == "so_even") {
        return ClassicalFamily::so_even;
    }
    if (name == "sp") {
        return ClassicalFamily::sp;
    }
    throw UnsupportedFamily("unknown classical family '" + std::string(name) + "'");
}

std::string to_string(ClassicalFamily family)
{
    switch (family) {
    case ClassicalFamily::gl:
        return "gl";
    case ClassicalFamily::sl:
        return "sl";
    case ClassicalFamily::so_odd:
        return "so_odd";
    case ClassicalFamily::so_even:
        return "so_even";
    case ClassicalFamily::sp:
        return "sp";
    }
    return "?";
}

LieAlgebra algebra_from_matrices(const std::vector<Matrix>& matrices, std::vector<std::string> labels)
{
    if (matrices.empty()) {
        throw std::invalid_argument("algebra_from_matrices: empty basis");
    }
    const std::size_t size = matrices.front().rows();
    std::vector<Vector> flat;
    for (const auto& m : matrices) {
        flat.push_back(flatten(m));
    }
    const BasisCoordinates coords(size * size, flat);
    std::vector<BracketRecord> records;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        for (std::size_t j = i + 1; j < matrices.size(); ++j) {
            const Matrix commutator = matrices[i] * matrices[j] - matrices[j] * matrices[i];
            auto c = coords.coordinates(flatten(commutator));
            if (!c) {
                throw PreconditionError("matrix span is not closed under the commutator");
            }
            for (std::size_t k = 0; k < c->size(); ++k) {
                if (sgn((*c)[k]) != 0) {
                    records.push_back({i, j, k, (*c)[k]});
                }
            }
        }
    }
    return LieAlgebra(matrices.size(), std::move(labels), records);
}

ClassicalAlgebra build_classical(ClassicalFamily family, std::size_t n)
{
    MatrixBasis basis = classical_basis(family, n);
    auto algebra = std::make_shared<const LieAlgebra>(algebra_from_matrices(basis.matrices, basis.labels));
    std::vector<Element> toral_basis;
    if (family == ClassicalFamily::gl) {
        for (std::size_t i = 0; i < n; ++i) {
            toral_basis.push_back(algebra->basis_element(i * n + i));
        }
    } else {
        for (std::size_t i = basis.cartan_begin; i < basis.matrices.size(); ++i) {
            toral_basis.push_back(algebra->basis_element(i));
        }
    }
    ToralSubalgebra toral(algebra, std::move(toral_basis));
    return ClassicalAlgebra{{algebra, std::move(toral)}, family, n, basis.size, std::move(basis.matrices)};
}

AlgebraWithToral direct_sum(const AlgebraWithToral& first, const AlgebraWithToral& second)
{
    auto algebra = std::make_shared<const LieAlgebra>(direct_sum(*first.algebra, *second.algebra));
    const std::size_t n1 = first.algebra->dim();
    const std::size_t n = algebra->dim();
    std::vector<Element> toral_basis;
    for (const auto& t : first.toral.chosen_basis()) {
        Element e = zero_vector(n);
        std::copy(t.begin(), t.end(), e.begin());
        toral_basis.push_back(std::move(e));
    }
    for (const auto& t : second.toral.chosen_basis()) {
        Element e = zero_vector(n);
        std::copy(t.begin(), t.end(), e.begin() + static_cast<std::ptrdiff_t>(n1));
        toral_basis.push_back(std::move(e));
    }
    ToralSubalgebra toral(algebra, std::move(toral_basis));
    return {algebra, std::move(toral)};
}

AlgebraWithToral abelian_with_toral(std::size_t dim)
{
    auto algebra = std::make_shared<const LieAlgebra>(abelian(dim));
    std::vector<Element> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back(algebra->basis_element(i));
    }
    ToralSubalgebra toral(algebra, std::move(basis));
    return {algebra, std::move(toral)};
}

}  // namespace lietk
