#pragma once

// Exact rational affine geometry inside the unit cube [0,1]^r.
//
// Every inequality is kept in the normal form  form(x) <= 0  where
// form(x) = sum_i coeff_i * x_i - constant. Callers translate ">= alpha"
// style conditions at the construction site.

#include "innc/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace innc {

struct AffineForm {
    std::vector<Integer> coeffs;
    Rational constant;

    std::size_t dim() const noexcept { return coeffs.size(); }
    bool is_constant() const;

    AffineForm operator+(const AffineForm &other) const;
    AffineForm scaled(const Integer &factor) const;

    friend bool operator==(const AffineForm &, const AffineForm &) = default;
};

/// Point of the closed unit cube with exact rational coordinates.
class CubePoint {
  public:
    /// Throws DomainError if a coordinate lies outside [0, 1].
    explicit CubePoint(std::vector<Rational> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    const std::vector<Rational> &coords() const noexcept { return coords_; }
    const Rational &operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const CubePoint &, const CubePoint &) = default;

  private:
    std::vector<Rational> coords_;
};

/// Conjunction of `form(x) <= 0` over all forms, intersected with the cube.
class HalfspaceSystem {
  public:
    explicit HalfspaceSystem(std::size_t r, std::vector<AffineForm> forms = {});

    std::size_t dim() const noexcept { return r_; }
    const std::vector<AffineForm> &forms() const noexcept { return forms_; }

    /// Copy without the form at `index`.
    HalfspaceSystem without(std::size_t index) const;

  private:
    std::size_t r_;
    std::vector<AffineForm> forms_;
};

Rational evaluate_form(const AffineForm &form, const CubePoint &p);
bool contains(const HalfspaceSystem &sys, const CubePoint &p);

/// Indices of the forms vanishing at p. Requires contains(sys, p).
std::vector<std::size_t> tight_set(const HalfspaceSystem &sys, const CubePoint &p);

/// r minus the rank of the coefficient matrix of `tight`. Throws DomainError
/// for an empty list or when the equations form(x) = 0 are inconsistent.
int face_dimension(std::span<const AffineForm> tight);

/// Rank of an integer matrix (fraction-free elimination).
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

/// The equalities x_i = 0 / x_i = 1 of the cube facets containing p,
/// written as forms (-x_i and x_i - 1).
std::vector<AffineForm> box_tight_forms(const CubePoint &p);

/// A point in the relative interior of
///   { x in [0,1]^r : ineq(x) <= 0, eq(x) = 0 },
/// or nullopt when that set is empty. Exact Fourier-Motzkin projection with
/// midpoint back-substitution.
std::optional<CubePoint> relative_interior_point(std::size_t r,
                                                 std::span<const AffineForm> inequalities,
                                                 std::span<const AffineForm> equalities);

/// Canonical description of the affine span { x : form(x) = 0 for all
/// forms }: reduced row echelon form of the augmented matrix. Two systems
/// define the same affine subspace iff their keys are equal.
std::vector<std::vector<Rational>> affine_span_key(std::span<const AffineForm> forms);

} // namespace innc
