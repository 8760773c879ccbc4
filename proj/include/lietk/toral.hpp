#pragma once

#include "lietk/lie_algebra.hpp"

#include <map>
#include <memory>
#include <vector>

namespace lietk {

/// A nonzero abelian subalgebra with a fixed ordered basis. Weights are
/// recorded as their values on this basis.
class ToralSubalgebra {
public:
    /// Throws NotToral if the basis is empty, dependent, or not abelian.
    /// Diagonalizability is checked by weight_decomposition / is_toral.
    ToralSubalgebra(std::shared_ptr<const LieAlgebra> algebra, std::vector<Element> chosen_basis);

    const LieAlgebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return algebra_; }
    const Subspace& space() const { return space_; }
    const std::vector<Element>& chosen_basis() const { return coords_.basis(); }
    std::size_t dim() const { return coords_.size(); }

    /// Coordinates of an element of the subalgebra against chosen_basis().
    std::optional<Vector> coordinates(const Element& h) const { return coords_.coordinates(h); }
    const BasisCoordinates& basis_coordinates() const { return coords_; }
    Element element(const Vector& coords) const { return coords_.combine(coords); }

private:
    std::shared_ptr<const LieAlgebra> algebra_;
    Subspace space_;
    BasisCoordinates coords_;
};

/// Linear functional on a toral subalgebra, stored as its values on the
/// chosen basis.
struct Weight {
    Vector coords;

    bool is_zero() const { return lietk::is_zero(coords); }

    /// Value on an element given by toral coordinates.
    Rational operator()(const Vector& toral_coords) const { return dot(coords, toral_coords); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator<(const Weight& a, const Weight& b) { return compare(a.coords, b.coords) < 0; }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rational& s, const Weight& a);
std::string to_string(const Weight& w);

/// L = sum of weight spaces; the zero weight is always present.
class WeightDecomposition {
public:
    WeightDecomposition(ToralSubalgebra toral, std::map<Weight, Subspace> spaces);

    const ToralSubalgebra& toral() const { return toral_; }
    const LieAlgebra& algebra() const { return toral_.algebra(); }
    const std::map<Weight, Subspace>& spaces() const { return spaces_; }

    /// Nonzero weights, sorted.
    const std::vector<Weight>& roots() const { return roots_; }
    bool is_root(const Weight& w) const;
    bool is_root_or_zero(const Weight& w) const { return w.is_zero() || is_root(w); }

    /// Weight space, or the zero subspace when w is not a weight.
    Subspace space(const Weight& w) const;
    const Subspace& zero_space() const { return spaces_.at(zero_weight()); }
    Weight zero_weight() const { return Weight{zero_vector(toral_.dim())}; }

    /// Value of the weight on an element of the toral subalgebra.
    Rational evaluate(const Weight& w, const Element& h) const;

    friend bool operator==(const WeightDecomposition& a, const WeightDecomposition& b)
    {
        return a.spaces_ == b.spaces_;
    }

private:
    ToralSubalgebra toral_;
    std::map<Weight, Subspace> spaces_;
    std::vector<Weight> roots_;
};

/// s is abelian and ad(s) is simultaneously diagonalizable over the rationals.
/// True for the zero subspace; ToralSubalgebra itself must be nonzero.
bool is_toral(const LieAlgebra& algebra, const Subspace& s);

/// Throws NotSplit if the action is not diagonalizable over the rationals.
WeightDecomposition weight_decomposition(const ToralSubalgebra& toral);

/// Decomposition with respect to a toral subalgebra contained in d.toral():
/// weights are restricted and the spaces of weights with equal restriction
/// are summed. The result is checked against a direct recomputation.
/// Throws PreconditionError if t_sub is not inside d.toral().
WeightDecomposition restrict(const WeightDecomposition& d, const ToralSubalgebra& t_sub);

/// [L_a, L_b] within L_{a+b} for all weight pairs; returns the first failing pair.
std::optional<std::pair<Weight, Weight>> check_grading(const WeightDecomposition& d);

}  // namespace lietk
