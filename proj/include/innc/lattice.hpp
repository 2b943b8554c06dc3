#pragma once

// Integer lattice tools: row Hermite normal form with phase tracking,
// integer kernels and saturation.

#include "innc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace innc {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Result of reducing generators (rows) of a lattice to Hermite normal form.
/// Each generator may carry a rational phase; phases follow the same
/// unimodular row operations and are kept modulo 1.
struct HermiteReduction {
    std::size_t cols = 0;
    IntegerMatrix basis;               ///< nonzero HNF rows, pivots increasing
    std::vector<std::size_t> pivots;   ///< pivot column of each basis row
    std::vector<Rational> phases;      ///< phase of each basis row, in [0,1)
    std::vector<Rational> relation_phases; ///< phases of rows reduced to zero
    IntegerMatrix relations;           ///< transform rows of zero rows (if tracked)
};

/// Row HNF of `rows` (each of length `cols`). When `track_transform` is set
/// the unimodular transform is applied to an identity matrix alongside and
/// the rows that became zero are returned in `relations`.
HermiteReduction hermite_reduce(IntegerMatrix rows, std::size_t cols,
                                std::vector<Rational> phases = {},
                                bool track_transform = false);

/// If w lies in the lattice spanned by `h.basis`, the phase obtained by
/// writing w as an integer combination of the basis; nullopt otherwise.
std::optional<Rational> lattice_phase(const HermiteReduction &h, const std::vector<Integer> &w);

/// Basis (in HNF) of { x in Z^cols : M x = 0 }.
IntegerMatrix integer_kernel(const IntegerMatrix &m, std::size_t cols);

/// Basis (in HNF) of (Q-span of rows) intersected with Z^cols.
IntegerMatrix saturate(const IntegerMatrix &rows, std::size_t cols);

} // namespace innc
