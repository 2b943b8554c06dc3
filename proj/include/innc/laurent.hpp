#pragma once

#include "innc/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace innc {

/// Laurent polynomial in `nvars` variables t_1..t_r with integer
/// coefficients. Terms with zero coefficient are never stored.
class LaurentPolynomial {
  public:
    using Exponents = std::vector<long>;

    explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPolynomial constant(std::size_t nvars, const Integer &c);
    static LaurentPolynomial monomial(Exponents exponents, const Integer &c = 1);
    static LaurentPolynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, Integer> &terms() const noexcept { return terms_; }

    /// Terms sorted by exponent vector, lexicographically decreasing.
    std::vector<std::pair<Exponents, Integer>> sorted_terms() const;

    LaurentPolynomial &operator+=(const LaurentPolynomial &other);
    LaurentPolynomial &operator-=(const LaurentPolynomial &other);
    LaurentPolynomial operator+(const LaurentPolynomial &other) const;
    LaurentPolynomial operator-(const LaurentPolynomial &other) const;
    LaurentPolynomial operator*(const LaurentPolynomial &other) const;
    LaurentPolynomial pow(unsigned long e) const;

    /// Shifts so that each variable's minimal exponent is zero and flips the
    /// sign so that the lexicographically leading coefficient is positive.
    LaurentPolynomial normalized() const;

    /// Human-readable form such as "t1^2 t2^3 - 1".
    std::string to_string() const;

    friend bool operator==(const LaurentPolynomial &, const LaurentPolynomial &) = default;

  private:
    void add_term(const Exponents &e, const Integer &c);

    std::size_t nvars_;
    std::map<Exponents, Integer> terms_;
};

} // namespace innc
