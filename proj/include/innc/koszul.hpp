#pragma once

// Truncated Koszul complexes over the Laurent ring Z[t_1^{+-1}, ..., t_r^{+-1}]
// and their homology at torsion characters, computed exactly over cyclotomic
// fields. Serves as an independent oracle for f-values of generic
// hyperplane arrangements.

#include "innc/charvariety.hpp"
#include "innc/cyclotomic.hpp"
#include "innc/laurent.hpp"

#include <cstddef>
#include <vector>

namespace innc {

/// Dense matrix of Laurent polynomials, row-major.
struct LaurentMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<LaurentPolynomial> entries;

    const LaurentPolynomial &at(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
    LaurentPolynomial &at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

/// C_n -> C_{n-1} -> ... -> C_0 with C_p = Lambda^p(R^r). Differential d_p
/// (stored at index p-1) has one row per basis element of Lambda^p, holding
/// the coordinates of its image in Lambda^{p-1}.
struct ComplexSpec {
    std::size_t r = 0;
    std::size_t n = 0;
    /// bases[p]: sorted index subsets of size p, in lexicographic order.
    std::vector<std::vector<std::vector<std::size_t>>> bases;
    std::vector<LaurentMatrix> differentials;

    std::size_t rank_of_term(std::size_t p) const { return bases.at(p).size(); }
};

/// d(e_I) = sum_k (-1)^k (t_{i_k} - 1) e_{I - i_k}. Requires 1 <= n <= r;
/// throws DomainError otherwise.
ComplexSpec truncated_koszul(std::size_t r, std::size_t n);

LaurentMatrix multiply(const LaurentMatrix &a, const LaurentMatrix &b);

/// d_{p} d_{p-1} = 0 for every consecutive pair, checked symbolically.
bool composites_vanish(const ComplexSpec &spec);

/// Differentials with t_i = zeta_N^{N phase_i}, N the order of chi.
std::vector<CyclotomicMatrix> evaluate_at(const ComplexSpec &spec, const CharacterPoint &chi);

/// Betti numbers H_0..H_n of the evaluated complex. H_n is the kernel of the
/// top differential.
std::vector<std::size_t> homology_ranks_at(const ComplexSpec &spec, const CharacterPoint &chi);

struct OracleRecord {
    CharacterPoint character;
    /// Homology ranks of the (r-1)-torus skeleton complex; all zero off the
    /// support.
    std::vector<std::size_t> ranks;
    std::size_t f = 0;
};

/// f for r generic hyperplanes in C^{n+1}: 0 unless the phases sum to an
/// integer; otherwise H_n of the truncated Koszul complex of the
/// (r-1)-torus evaluated at the first r-1 coordinates (t_r eliminated
/// through t_1...t_r = 1).
OracleRecord oracle_record(std::size_t r, std::size_t n, const CharacterPoint &chi);
std::size_t oracle_f(std::size_t r, std::size_t n, const CharacterPoint &chi);

/// Oracle records for all characters whose phases lie in (1/order)Z, in
/// torsion_characters order. Work is split across `threads` workers
/// (0 = hardware concurrency); results do not depend on the split.
std::vector<OracleRecord> oracle_sweep(std::size_t r, std::size_t n, long order,
                                       unsigned threads = 0);

} // namespace innc
