#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N) = Q[x] / Phi_N(x).

#include "innc/rational.hpp"

#include <cstddef>
#include <vector>

namespace innc {

/// Coefficients of the N-th cyclotomic polynomial over Z, lowest degree
/// first. Results are memoised per thread.
const std::vector<Integer> &cyclotomic_polynomial(long order);

/// Euler's totient via the degree of Phi_N.
std::size_t totient(long order);

/// Element of Q(zeta_N): coefficients of a polynomial of degree < phi(N).
using CyclotomicElement = std::vector<Rational>;

class CyclotomicField {
  public:
    explicit CyclotomicField(long order);

    long order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }

    CyclotomicElement zero() const;
    CyclotomicElement one() const;
    CyclotomicElement from_integer(const Integer &z) const;
    /// zeta_N^k for any integer k.
    CyclotomicElement zeta_power(long k) const;

    CyclotomicElement add(const CyclotomicElement &a, const CyclotomicElement &b) const;
    CyclotomicElement sub(const CyclotomicElement &a, const CyclotomicElement &b) const;
    CyclotomicElement mul(const CyclotomicElement &a, const CyclotomicElement &b) const;
    /// Throws DomainError for zero.
    CyclotomicElement inv(const CyclotomicElement &a) const;
    static bool is_zero(const CyclotomicElement &a);

  private:
    CyclotomicElement reduce(std::vector<Rational> poly) const;

    long order_;
    std::vector<Rational> modulus_; ///< monic Phi_N
};

/// Dense matrix over Q(zeta_N), row-major.
struct CyclotomicMatrix {
    long order = 1;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CyclotomicElement> entries;

    const CyclotomicElement &at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    CyclotomicElement &at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

/// Rank by Gaussian elimination over the field.
std::size_t rank(const CyclotomicField &field, CyclotomicMatrix m);

CyclotomicMatrix multiply(const CyclotomicField &field, const CyclotomicMatrix &a,
                          const CyclotomicMatrix &b);

bool is_zero(const CyclotomicMatrix &m);

} // namespace innc
