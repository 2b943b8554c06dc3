#include "innc/koszul.hpp"

#include "innc/errors.hpp"
#include "innc/parallel.hpp"

#include <algorithm>

namespace innc {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t r, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (cur.size() == p) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < r; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

ComplexSpec build_koszul(std::size_t r, std::size_t n) {
    ComplexSpec spec;
    spec.r = r;
    spec.n = n;
    for (std::size_t p = 0; p <= n; ++p)
        spec.bases.push_back(subsets_of_size(r, p));
    const auto one = LaurentPolynomial::constant(r, 1);
    for (std::size_t p = 1; p <= n; ++p) {
        const auto &src = spec.bases[p];
        const auto &dst = spec.bases[p - 1];
        LaurentMatrix d{src.size(), dst.size(),
                        std::vector<LaurentPolynomial>(src.size() * dst.size(),
                                                       LaurentPolynomial(r))};
        for (std::size_t row = 0; row < src.size(); ++row) {
            for (std::size_t k = 0; k < p; ++k) {
                auto face = src[row];
                const std::size_t idx = face[k];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                const auto col = static_cast<std::size_t>(
                    std::lower_bound(dst.begin(), dst.end(), face) - dst.begin());
                auto entry = LaurentPolynomial::variable(r, idx) - one;
                d.at(row, col) = (k % 2 == 0) ? entry : LaurentPolynomial(r) - entry;
            }
        }
        spec.differentials.push_back(std::move(d));
    }
    return spec;
}

CyclotomicElement evaluate(const CyclotomicField &field, const LaurentPolynomial &p,
                           const std::vector<long> &powers) {
    auto out = field.zero();
    for (const auto &[e, c] : p.terms()) {
        long k = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            k += e[i] * powers[i];
        auto term = field.zeta_power(k);
        for (auto &coef : term)
            coef *= Rational(c);
        out = field.add(out, term);
    }
    return out;
}

} // namespace

ComplexSpec truncated_koszul(std::size_t r, std::size_t n) {
    if (n < 1 || n > r)
        throw DomainError("truncated Koszul complex needs 1 <= n <= r, got r=" +
                          std::to_string(r) + ", n=" + std::to_string(n));
    return build_koszul(r, n);
}

LaurentMatrix multiply(const LaurentMatrix &a, const LaurentMatrix &b) {
    if (a.cols != b.rows)
        throw DimensionError("Laurent matrix product: shape mismatch");
    const std::size_t nv = a.entries.empty() ? 0 : a.entries.front().nvars();
    LaurentMatrix out{a.rows, b.cols,
                      std::vector<LaurentPolynomial>(a.rows * b.cols, LaurentPolynomial(nv))};
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

bool composites_vanish(const ComplexSpec &spec) {
    for (std::size_t p = 1; p < spec.differentials.size(); ++p) {
        const auto prod = multiply(spec.differentials[p], spec.differentials[p - 1]);
        for (const auto &e : prod.entries)
            if (!e.is_zero())
                return false;
    }
    return true;
}

std::vector<CyclotomicMatrix> evaluate_at(const ComplexSpec &spec, const CharacterPoint &chi) {
    if (chi.dim() != spec.r)
        throw DimensionError("character has " + std::to_string(chi.dim()) +
                             " coordinates, complex has " + std::to_string(spec.r));
    const long order = to_long(chi.order());
    const CyclotomicField field(order);
    std::vector<long> powers;
    for (const auto &ph : chi.phases())
        powers.push_back(to_long(Integer(ph * order)));
    std::vector<CyclotomicMatrix> out;
    for (const auto &d : spec.differentials) {
        CyclotomicMatrix m{order, d.rows, d.cols, {}};
        m.entries.reserve(d.entries.size());
        for (const auto &e : d.entries)
            m.entries.push_back(evaluate(field, e, powers));
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::size_t> homology_ranks_at(const ComplexSpec &spec, const CharacterPoint &chi) {
    const auto mats = evaluate_at(spec, chi);
    const CyclotomicField field(to_long(chi.order()));
    // rk[p] = rank of d_p; d_0 and d_{n+1} are zero.
    std::vector<std::size_t> rk(spec.n + 2, 0);
    for (std::size_t p = 1; p <= spec.n; ++p)
        rk[p] = rank(field, mats[p - 1]);
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p <= spec.n; ++p)
        out.push_back(spec.rank_of_term(p) - rk[p] - rk[p + 1]);
    return out;
}

OracleRecord oracle_record(std::size_t r, std::size_t n, const CharacterPoint &chi) {
    if (chi.dim() != r)
        throw DimensionError("character has " + std::to_string(chi.dim()) +
                             " coordinates, expected " + std::to_string(r));
    if (n < 1)
        throw DomainError("oracle needs n >= 1");
    OracleRecord rec{chi, std::vector<std::size_t>(n + 1, 0), 0};
    Rational total = 0;
    for (const auto &ph : chi.phases())
        total += ph;
    if (mod_one(total) != 0 || r < 1 || r - 1 < n)
        return rec;
    std::vector<Rational> head(chi.phases().begin(), chi.phases().end() - 1);
    rec.ranks = homology_ranks_at(build_koszul(r - 1, n), CharacterPoint(std::move(head)));
    rec.f = rec.ranks[n];
    return rec;
}

std::size_t oracle_f(std::size_t r, std::size_t n, const CharacterPoint &chi) {
    return oracle_record(r, n, chi).f;
}

std::vector<OracleRecord> oracle_sweep(std::size_t r, std::size_t n, long order,
                                       unsigned threads) {
    if (order < 1)
        throw InputError("oracle sweep order must be positive");
    const TorsionCharacters chars(std::vector<long>(r, order));
    return parallel_map(chars.size(), threads, [&](std::size_t i) {
        return oracle_record(r, n, chars[i]);
    });
}

} // namespace innc
