#include "innc/laurent.hpp"

#include "innc/errors.hpp"

#include <algorithm>
#include <limits>

namespace innc {

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Integer &c) {
    LaurentPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exponents, const Integer &c) {
    LaurentPolynomial p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
}

void LaurentPolynomial::add_term(const Exponents &e, const Integer &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::vector<std::pair<LaurentPolynomial::Exponents, Integer>>
LaurentPolynomial::sorted_terms() const {
    return {terms_.rbegin(), terms_.rend()};
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &other) {
    if (other.nvars_ != nvars_)
        throw DimensionError("Laurent polynomials in different numbers of variables");
    for (const auto &[e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &other) {
    if (other.nvars_ != nvars_)
        throw DimensionError("Laurent polynomials in different numbers of variables");
    for (const auto &[e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial &other) const {
    LaurentPolynomial out = *this;
    out += other;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial &other) const {
    LaurentPolynomial out = *this;
    out -= other;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial &other) const {
    if (other.nvars_ != nvars_)
        throw DimensionError("Laurent polynomials in different numbers of variables");
    LaurentPolynomial out(nvars_);
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : other.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long e) const {
    LaurentPolynomial result = constant(nvars_, 1);
    LaurentPolynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e > 0)
            base = base * base;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    if (is_zero())
        return *this;
    Exponents low(nvars_, std::numeric_limits<long>::max());
    for (const auto &[e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            low[i] = std::min(low[i], e[i]);
    const bool flip = terms_.rbegin()->second < 0;
    LaurentPolynomial out(nvars_);
    for (const auto &[e, c] : terms_) {
        Exponents shifted(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
            shifted[i] = e[i] - low[i];
        out.add_term(shifted, flip ? Integer(-c) : c);
    }
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : sorted_terms()) {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += ' ';
            mono += "t" + std::to_string(i + 1);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        Integer mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + " " + mono;
        first = false;
    }
    return out;
}

} // namespace innc
