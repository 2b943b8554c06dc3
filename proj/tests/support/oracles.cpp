#include "oracles.hpp"

#include <stdexcept>

namespace innc::testing {

namespace {

std::vector<Rational> lhs_values(const ResolutionData &d, const GermBasisElement &phi,
                                 const std::vector<Rational> &x,
                                 std::vector<Rational> &rhs) {
    std::vector<Rational> lhs;
    for (const auto &E : d.exceptional) {
        Rational s = 0;
        for (std::size_t i = 0; i < d.r; ++i)
            s += E.a[i] * (1 - x[i]);
        lhs.push_back(s);
        long e = 0;
        if (auto it = phi.e.find(E.id); it != phi.e.end())
            e = it->second;
        rhs.push_back(Rational(e + E.c + 1));
    }
    return lhs;
}

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

bool brute_in_log_ideal(const ResolutionData &d, const GermBasisElement &phi,
                        const std::vector<Rational> &x) {
    std::vector<Rational> rhs;
    const auto lhs = lhs_values(d, phi, x, rhs);
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] > rhs[k])
            return false;
    return true;
}

bool brute_in_ideal(const ResolutionData &d, const GermBasisElement &phi,
                    const std::vector<Rational> &x) {
    std::vector<Rational> rhs;
    const auto lhs = lhs_values(d, phi, x, rhs);
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] >= rhs[k])
            return false;
    return true;
}

Rational lct_ordinary_point(long r, long n) {
    Rational q(n + 1, r);
    q.canonicalize();
    return q < 1 ? q : Rational(1);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

std::size_t arrangement_f_closed_form(std::size_t r, std::size_t n,
                                      const std::vector<Rational> &phases) {
    Rational total = 0;
    bool trivial = true;
    for (const auto &p : phases) {
        total += p;
        trivial = trivial && p.get_den() == 1;
    }
    if (total.get_den() != 1)
        return 0;
    if (r < 1)
        return 0;
    if (trivial)
        return binom(r - 1, n);
    return r < 2 ? 0 : binom(r - 2, n);
}

std::set<long> cone_face_levels(const std::vector<long> &degrees, long n, long bound) {
    long sum = 0;
    for (long d : degrees)
        sum += d;
    std::set<long> levels;
    for (long s = 0; s <= bound; ++s)
        if (sum - n - 1 - s >= 0)
            levels.insert(sum - n - 1 - s);
    return levels;
}

std::vector<std::vector<Rational>> torsion_points(std::size_t r, long order) {
    std::vector<std::vector<Rational>> out;
    std::vector<long> digits(r, 0);
    while (true) {
        std::vector<Rational> ph;
        for (long dgt : digits) {
            Rational q(dgt, order);
            q.canonicalize();
            ph.push_back(q);
        }
        out.push_back(std::move(ph));
        std::size_t i = r;
        while (i > 0 && ++digits[i - 1] == order)
            digits[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

bool satisfies(const std::vector<TorusEquation> &eqs, const std::vector<Rational> &phases) {
    for (const auto &eq : eqs) {
        Rational s = -eq.phase;
        for (std::size_t i = 0; i < phases.size(); ++i)
            s += eq.v[i] * phases[i];
        if (s.get_den() != 1)
            return false;
    }
    return true;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::vector<std::pair<long, long>>>> &m,
                       long order) {
    // Smallest prime p = 1 mod N above 10^6, and a primitive N-th root mod p.
    u64 p = 1000000 / static_cast<u64>(order) * static_cast<u64>(order) + 1;
    while (!is_prime(p))
        p += static_cast<u64>(order);
    u64 zeta = 0;
    for (u64 g = 2; g < p && !zeta; ++g) {
        const u64 cand = powmod(g, (p - 1) / static_cast<u64>(order), p);
        bool primitive = true;
        for (long d = 1; d < order && primitive; ++d)
            if (order % d == 0 && powmod(cand, static_cast<u64>(d), p) == 1)
                primitive = false;
        if (primitive)
            zeta = cand;
    }
    if (!zeta)
        throw std::logic_error("no primitive root found");

    std::vector<std::vector<u64>> a;
    for (const auto &row : m) {
        std::vector<u64> out;
        for (const auto &entry : row) {
            u64 v = 0;
            for (auto [e, c] : entry) {
                long ee = ((e % order) + order) % order;
                u64 term = powmod(zeta, static_cast<u64>(ee), p);
                u64 cc = static_cast<u64>(((c % static_cast<long>(p)) + static_cast<long>(p)) %
                                          static_cast<long>(p));
                v = (v + mulmod(term, cc, p)) % p;
            }
            out.push_back(v);
        }
        a.push_back(std::move(out));
    }
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const u64 inv = powmod(a[rank][c], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const u64 f = mulmod(a[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace innc::testing
