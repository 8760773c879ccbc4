#include "lietk/toral.hpp"

#include "lietk/errors.hpp"

namespace lietk {

ToralSubalgebra::ToralSubalgebra(std::shared_ptr<const LieAlgebra> algebra,
                                 std::vector<Element> chosen_basis)
    : algebra_(std::move(algebra))
{
    if (!algebra_) {
        throw std::invalid_argument("toral subalgebra needs an algebra");
    }
    if (chosen_basis.empty()) {
        throw NotToral("toral subalgebra must be nonzero");
    }
    const std::size_t n = algebra_->dim();
    try {
        coords_ = BasisCoordinates(n, chosen_basis);
    } catch (const PreconditionError&) {
        throw NotToral("toral basis is linearly dependent");
    }
    for (std::size_t i = 0; i < chosen_basis.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen_basis.size(); ++j) {
            if (!is_zero(algebra_->bracket(chosen_basis[i], chosen_basis[j]))) {
                throw NotToral("toral basis elements " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute");
            }
        }
    }
    space_ = Subspace::span(n, chosen_basis);
}

Weight operator+(const Weight& a, const Weight& b)
{
    return Weight{a.coords + b.coords};
}

Weight operator-(const Weight& a, const Weight& b)
{
    return Weight{a.coords - b.coords};
}

Weight operator-(const Weight& a)
{
    return Weight{-a.coords};
}

Weight operator*(const Rational& s, const Weight& a)
{
    return Weight{s * a.coords};
}

std::string to_string(const Weight& w)
{
    return to_string(w.coords);
}

WeightDecomposition::WeightDecomposition(ToralSubalgebra toral, std::map<Weight, Subspace> spaces)
    : toral_(std::move(toral)), spaces_(std::move(spaces))
{
    const std::size_t n = toral_.algebra().dim();
    spaces_.try_emplace(zero_weight(), Subspace::zero(n));
    std::size_t total = 0;
    for (const auto& [w, s] : spaces_) {
        if (w.coords.size() != toral_.dim() || s.ambient_dim() != n) {
            throw DimensionMismatch("weight decomposition entry has the wrong shape");
        }
        total += s.dim();
        if (!w.is_zero()) {
            if (s.is_zero()) {
                throw InvariantViolation("root " + to_string(w) + " with a zero weight space");
            }
            roots_.push_back(w);
        }
    }
    if (total != n) {
        throw InvariantViolation("weight spaces have total dimension " + std::to_string(total) +
                                 ", expected " + std::to_string(n));
    }
}

bool WeightDecomposition::is_root(const Weight& w) const
{
    return !w.is_zero() && spaces_.contains(w);
}

Subspace WeightDecomposition::space(const Weight& w) const
{
    auto it = spaces_.find(w);
    if (it == spaces_.end()) {
        return Subspace::zero(algebra().dim());
    }
    return it->second;
}

Rational WeightDecomposition::evaluate(const Weight& w, const Element& h) const
{
    auto c = toral_.coordinates(h);
    if (!c) {
        throw PreconditionError("element " + to_string(h) + " is not in the toral subalgebra");
    }
    return w(*c);
}

namespace {

std::map<Weight, Subspace> eigen_split(const ToralSubalgebra& toral)
{
    std::vector<Matrix> ops;
    for (const auto& t : toral.chosen_basis()) {
        ops.push_back(ad_matrix(toral.algebra(), t));
    }
    std::map<Weight, Subspace> spaces;
    for (auto& piece : simultaneous_eigenspaces(toral.algebra().dim(), ops)) {
        spaces.emplace(Weight{std::move(piece.eigenvalues)}, std::move(piece.space));
    }
    return spaces;
}

}  // namespace

bool is_toral(const LieAlgebra& algebra, const Subspace& s)
{
    if (s.is_zero()) {
        return true;  // vacuously abelian and diagonalizable
    }
    const auto basis = s.basis_vectors();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!is_zero(algebra.bracket(basis[i], basis[j]))) {
                return false;
            }
        }
    }
    std::vector<Matrix> ops;
    for (const auto& t : basis) {
        ops.push_back(ad_matrix(algebra, t));
    }
    try {
        simultaneous_eigenspaces(algebra.dim(), ops);
    } catch (const NotSplit&) {
        return false;
    }
    return true;
}

WeightDecomposition weight_decomposition(const ToralSubalgebra& toral)
{
    WeightDecomposition d(toral, eigen_split(toral));
    const LieAlgebra& algebra = toral.algebra();
    for (const auto& [w, s] : d.spaces()) {
        for (std::size_t b = 0; b < s.dim(); ++b) {
            const Element x = s.basis_vector(b);
            for (std::size_t t = 0; t < toral.dim(); ++t) {
                if (algebra.bracket(toral.chosen_basis()[t], x) != w.coords[t] * x) {
                    throw InvariantViolation("eigen-equation fails for weight " + to_string(w));
                }
            }
        }
    }
    return d;
}

WeightDecomposition restrict(const WeightDecomposition& d, const ToralSubalgebra& t_sub)
{
    if (t_sub.algebra().dim() != d.algebra().dim()) {
        throw PreconditionError("restrict: toral subalgebras live in different algebras");
    }
    if (!d.toral().space().contains(t_sub.space())) {
        throw PreconditionError("restrict: subalgebra is not contained in the toral subalgebra");
    }
    // Column c holds the coordinates of t_sub's c-th basis element in d.toral().
    std::vector<Vector> sub_coords;
    for (const auto& t : t_sub.chosen_basis()) {
        sub_coords.push_back(*d.toral().coordinates(t));
    }
    std::map<Weight, std::vector<Element>> merged;
    for (const auto& [w, s] : d.spaces()) {
        Vector restricted(t_sub.dim());
        for (std::size_t c = 0; c < t_sub.dim(); ++c) {
            restricted[c] = w(sub_coords[c]);
        }
        auto& bucket = merged[Weight{std::move(restricted)}];
        for (std::size_t b = 0; b < s.dim(); ++b) {
            bucket.push_back(s.basis_vector(b));
        }
    }
    std::map<Weight, Subspace> spaces;
    for (auto& [w, vectors] : merged) {
        Subspace s = Subspace::span(d.algebra().dim(), vectors);
        if (!s.is_zero() || w.is_zero()) {
            spaces.emplace(w, std::move(s));
        }
    }
    WeightDecomposition result(t_sub, std::move(spaces));
    if (!(result == weight_decomposition(t_sub))) {
        throw InvariantViolation("restricted decomposition differs from direct recomputation");
    }
    return result;
}

std::optional<std::pair<Weight, Weight>> check_grading(const WeightDecomposition& d)
{
    const LieAlgebra& algebra = d.algebra();
    for (const auto& [a, sa] : d.spaces()) {
        for (const auto& [b, sb] : d.spaces()) {
            const Subspace target = d.space(a + b);
            for (std::size_t i = 0; i < sa.dim(); ++i) {
                for (std::size_t j = 0; j < sb.dim(); ++j) {
                    if (!target.contains(algebra.bracket(sa.basis_vector(i), sb.basis_vector(j)))) {
                        return std::make_pair(a, b);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace lietk
