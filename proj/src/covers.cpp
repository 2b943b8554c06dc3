#include "innc/covers.hpp"

#include "innc/cyclotomic.hpp"
#include "innc/errors.hpp"
#include "innc/koszul.hpp"
#include "innc/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace innc {

std::string to_string(FKind kind) {
    return kind == FKind::exact_oracle ? "exact (oracle)" : "principal lower bound";
}

std::string to_string(CoverMode mode) {
    switch (mode) {
    case CoverMode::unbranched:
        return "unbranched";
    case CoverMode::branched:
        return "branched";
    case CoverMode::milnor:
        return "milnor";
    }
    return "unknown";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return static_cast<std::uint64_t>(to_long(c));
}

FSource principal_source(std::vector<PrincipalComponent> comps) {
    return {[comps = std::move(comps)](const CharacterPoint &chi) {
                return principal_f(chi, comps);
            },
            FKind::principal_lower_bound};
}

FSource oracle_source(std::size_t r, long n) {
    if (n < 1)
        throw DomainError("oracle needs n >= 1");
    const auto nn = static_cast<std::size_t>(n);
    return {[r, nn](const CharacterPoint &chi) { return oracle_f(r, nn, chi); },
            FKind::exact_oracle};
}

FSource default_source(const ResolutionData &data, std::vector<PrincipalComponent> comps) {
    if (data.family && data.family->is_arrangement())
        return oracle_source(data.r, data.n);
    return principal_source(std::move(comps));
}

namespace {

void check_cover_args(std::size_t r, long n, const std::vector<long> &m) {
    if (n < 1)
        throw InputError("n must be at least 1");
    if (m.size() != r)
        throw InputError("expected " + std::to_string(r) + " branching orders, got " +
                         std::to_string(m.size()));
}

ComponentSet support_of(const CharacterPoint &chi) {
    ComponentSet s;
    for (std::size_t i = 0; i < chi.dim(); ++i)
        if (chi[i] != 0)
            s.push_back(i);
    return s;
}

std::vector<std::uint64_t> low_ranks(std::size_t r, long n) {
    std::vector<std::uint64_t> ranks(static_cast<std::size_t>(n) + 1, 0);
    for (long p = 0; p < n; ++p)
        ranks[static_cast<std::size_t>(p)] = binomial(r, static_cast<std::uint64_t>(p));
    return ranks;
}

} // namespace

BettiTable betti_unbranched(std::size_t r, long n, const FSource &source,
                            const std::vector<long> &m, unsigned long long cap) {
    check_cover_args(r, n, m);
    const TorsionCharacters chars(m, cap);
    BettiTable t;
    t.ranks = low_ranks(r, n);
    t.r = r;
    t.n = n;
    t.m = m;
    t.mode = CoverMode::unbranched;
    t.f_kind = source.kind;
    const auto values =
        parallel_map(chars.size(), 0, [&](std::size_t i) { return source.f(chars[i]); });
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        total += values[i];
        t.buckets[support_of(chars[i])] += values[i];
        ++t.characters;
    }
    // Index 0 is the trivial character.
    t.trivial_summand = values.at(0);
    t.trivial_character_unresolved = source.kind != FKind::exact_oracle;
    t.ranks[static_cast<std::size_t>(n)] = total;
    return t;
}

SubunionSource builtin_subunions(const ResolutionData &data) {
    if (!data.family)
        throw InputError("sub-union data can only be derived for builtin families; "
                         "supply sub-union components");
    return [data](const ComponentSet &keep) {
        auto sub = restrict_to(data, keep);
        if (sub.family->is_arrangement())
            return oracle_source(sub.r, sub.n);
        return principal_source(principal_components(faces_of_quasiadjunction(sub)));
    };
}

SubunionSource supplied_subunions(std::map<ComponentSet, std::vector<PrincipalComponent>> lists) {
    return [lists = std::move(lists)](const ComponentSet &keep) {
        auto it = lists.find(keep);
        if (it == lists.end()) {
            std::string name;
            for (auto i : keep)
                name += (name.empty() ? "" : ",") + std::to_string(i + 1);
            throw InputError("missing sub-union components for {" + name + "}");
        }
        return principal_source(it->second);
    };
}

BettiTable betti_branched(std::size_t r, long n, const SubunionSource &subunions,
                          const std::vector<long> &m, unsigned long long cap) {
    check_cover_args(r, n, m);
    const TorsionCharacters chars(m, cap);
    BettiTable t;
    t.ranks.assign(static_cast<std::size_t>(n) + 1, 0);
    t.ranks[0] = 1;
    t.r = r;
    t.n = n;
    t.m = m;
    t.mode = CoverMode::branched;
    t.f_kind = FKind::exact_oracle;

    // One source per occurring support, built once in support order.
    std::map<ComponentSet, FSource> sources;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        auto s = support_of(chars[i]);
        if (!s.empty() && !sources.count(s)) {
            auto src = subunions(s);
            if (src.kind != FKind::exact_oracle)
                t.f_kind = FKind::principal_lower_bound;
            sources.emplace(std::move(s), std::move(src));
        }
    }
    if (sources.empty())
        t.f_kind = FKind::exact_oracle;

    const auto values = parallel_map(chars.size(), 0, [&](std::size_t i) -> std::size_t {
        const auto chi = chars[i];
        const auto s = support_of(chi);
        if (s.empty())
            return 0;
        std::vector<Rational> reduced;
        for (auto k : s)
            reduced.push_back(chi[k]);
        return sources.at(s).f(CharacterPoint(std::move(reduced)));
    });
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        total += values[i];
        t.buckets[support_of(chars[i])] += values[i];
        ++t.characters;
    }
    t.ranks[static_cast<std::size_t>(n)] = total;
    return t;
}

LaurentPolynomial CharPoly::polynomial() const {
    auto out = LaurentPolynomial::constant(1, 1);
    for (const auto &f : factors) {
        const auto &phi = cyclotomic_polynomial(f.order);
        LaurentPolynomial p(1);
        for (std::size_t j = 0; j < phi.size(); ++j)
            p += LaurentPolynomial::monomial({static_cast<long>(j)}, phi[j]);
        out = out * p.pow(f.multiplicity);
    }
    return out;
}

MilnorResult milnor_fiber(std::size_t r, long n, const FSource &source, long order) {
    if (n < 1)
        throw InputError("n must be at least 1");
    if (order < 1)
        throw InputError("order bound must be positive");
    MilnorResult res;
    auto &t = res.table;
    t.ranks.assign(static_cast<std::size_t>(n) + 1, 0);
    t.ranks[0] = 1;
    for (long p = 1; p < n; ++p)
        t.ranks[static_cast<std::size_t>(p)] =
            r == 0 ? 0 : binomial(r - 1, static_cast<std::uint64_t>(p));
    t.r = r;
    t.n = n;
    t.m = {order};
    t.mode = CoverMode::milnor;
    t.f_kind = source.kind;
    t.trivial_character_unresolved = true;

    res.multiplicities = parallel_map(static_cast<std::size_t>(order - 1), 0, [&](std::size_t i) {
        const auto w = make_rational(static_cast<long>(i) + 1, order);
        return source.f(CharacterPoint(std::vector<Rational>(r, w)));
    });

    // Group by the exact order q = N / gcd(j, N).
    std::map<long, std::size_t> by_order;
    for (long j = 1; j < order; ++j) {
        const long q = order / std::gcd(j, order);
        const auto mult = res.multiplicities[static_cast<std::size_t>(j - 1)];
        auto [it, inserted] = by_order.try_emplace(q, mult);
        if (inserted || it->second == mult)
            continue;
        // Lower bounds may see only part of an orbit; exact values may not.
        if (source.kind == FKind::exact_oracle)
            throw InconsistencyError("monodromy multiplicities differ within the Galois orbit of "
                                     "primitive " + std::to_string(q) + "-th roots of unity");
        it->second = std::max(it->second, mult);
    }
    std::uint64_t top = 0;
    for (const auto &[q, mult] : by_order) {
        top += static_cast<std::uint64_t>(mult) * totient(q);
        if (mult > 0)
            res.charpoly.factors.push_back({q, mult});
    }
    t.characters = static_cast<std::uint64_t>(order - 1);
    t.ranks[static_cast<std::size_t>(n)] = top;
    return res;
}

} // namespace innc
