#include "innc/cyclotomic.hpp"

#include "innc/errors.hpp"

#include <algorithm>
#include <map>

namespace innc {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer> &den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + dn];
        quot[k] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[k + j] -= c * den[j];
    }
    return quot;
}

// (quotient, remainder) of a by b over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly &b) {
    trim(a);
    if (a.size() < b.size())
        return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / lead;
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[k + j] -= c * b[j];
    }
    trim(a);
    return {q, a};
}

QPoly poly_mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly poly_sub(QPoly a, const QPoly &b) {
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

const std::vector<Integer> &cyclotomic_polynomial(long order) {
    if (order < 1)
        throw DomainError("cyclotomic polynomial of nonpositive order");
    thread_local std::map<long, std::vector<Integer>> cache;
    if (auto it = cache.find(order); it != cache.end())
        return it->second;
    // x^N - 1 = prod_{d | N} Phi_d
    std::vector<Integer> poly(static_cast<std::size_t>(order) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(order)] = 1;
    for (long d = 1; d < order; ++d)
        if (order % d == 0)
            poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    return cache.emplace(order, std::move(poly)).first->second;
}

std::size_t totient(long order) { return cyclotomic_polynomial(order).size() - 1; }

CyclotomicField::CyclotomicField(long order) : order_(order) {
    for (const auto &c : cyclotomic_polynomial(order))
        modulus_.emplace_back(c);
}

CyclotomicElement CyclotomicField::zero() const { return CyclotomicElement(degree(), Rational(0)); }

CyclotomicElement CyclotomicField::one() const { return from_integer(1); }

CyclotomicElement CyclotomicField::from_integer(const Integer &z) const {
    auto out = zero();
    out[0] = Rational(z);
    return out;
}

CyclotomicElement CyclotomicField::reduce(std::vector<Rational> poly) const {
    trim(poly);
    auto rem = divmod(std::move(poly), modulus_).second;
    rem.resize(degree(), Rational(0));
    return rem;
}

CyclotomicElement CyclotomicField::zeta_power(long k) const {
    long e = k % order_;
    if (e < 0)
        e += order_;
    std::vector<Rational> mono(static_cast<std::size_t>(e) + 1, Rational(0));
    mono.back() = 1;
    return reduce(std::move(mono));
}

CyclotomicElement CyclotomicField::add(const CyclotomicElement &a,
                                       const CyclotomicElement &b) const {
    CyclotomicElement out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

CyclotomicElement CyclotomicField::sub(const CyclotomicElement &a,
                                       const CyclotomicElement &b) const {
    CyclotomicElement out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

CyclotomicElement CyclotomicField::mul(const CyclotomicElement &a,
                                       const CyclotomicElement &b) const {
    QPoly pa(a), pb(b);
    trim(pa);
    trim(pb);
    return reduce(poly_mul(pa, pb));
}

bool CyclotomicField::is_zero(const CyclotomicElement &a) {
    return std::all_of(a.begin(), a.end(), [](const Rational &c) { return c == 0; });
}

CyclotomicElement CyclotomicField::inv(const CyclotomicElement &a) const {
    // Extended Euclid: s*a + t*Phi = gcd, a nonzero constant since Phi is
    // irreducible and deg a < deg Phi.
    QPoly r0 = modulus_, r1(a);
    trim(r1);
    if (r1.empty())
        throw DomainError("inverse of zero in a cyclotomic field");
    QPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const Rational g = r1.at(0);
    for (auto &c : s1)
        c /= g;
    return reduce(std::move(s1));
}

std::size_t rank(const CyclotomicField &field, CyclotomicMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && CyclotomicField::is_zero(m.at(pivot, col)))
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(pivot, j), m.at(rank, j));
        const auto inv = field.inv(m.at(rank, col));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (CyclotomicField::is_zero(m.at(i, col)))
                continue;
            const auto factor = field.mul(m.at(i, col), inv);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = field.sub(m.at(i, j), field.mul(factor, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

CyclotomicMatrix multiply(const CyclotomicField &field, const CyclotomicMatrix &a,
                          const CyclotomicMatrix &b) {
    if (a.cols != b.rows)
        throw DimensionError("cyclotomic matrix product: shape mismatch");
    CyclotomicMatrix out{field.order(), a.rows, b.cols,
                         std::vector<CyclotomicElement>(a.rows * b.cols, field.zero())};
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (CyclotomicField::is_zero(a.at(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = field.add(out.at(i, j), field.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

bool is_zero(const CyclotomicMatrix &m) {
    return std::all_of(m.entries.begin(), m.entries.end(),
                       [](const CyclotomicElement &e) { return CyclotomicField::is_zero(e); });
}

} // namespace innc
