#include "innc/charvariety.hpp"

#include "innc/cyclotomic.hpp"
#include "innc/errors.hpp"

#include <algorithm>
#include <tuple>

namespace innc {

namespace {

Integer order_of(const std::vector<Rational> &phases) { return denominator_lcm(phases); }

void check_dim(std::size_t expected, std::size_t got, const char *what) {
    if (expected != got)
        throw DimensionError(std::string(what) + ": expected " + std::to_string(expected) +
                             " coordinates, got " + std::to_string(got));
}

} // namespace

CharacterPoint::CharacterPoint(std::vector<Rational> phases) {
    phases_.reserve(phases.size());
    for (auto &p : phases)
        phases_.push_back(mod_one(p));
    order_ = order_of(phases_);
}

CharacterPoint CharacterPoint::conjugate() const {
    std::vector<Rational> neg;
    neg.reserve(phases_.size());
    for (const auto &p : phases_)
        neg.push_back(-p);
    return CharacterPoint(std::move(neg));
}

// --- translated subtori ------------------------------------------------------

namespace {

struct Canonical {
    std::vector<TorusEquation> equations;
    bool empty = false;
};

Canonical canonicalize(std::size_t r, IntegerMatrix rows, std::vector<Rational> phases) {
    auto red = hermite_reduce(std::move(rows), r, std::move(phases));
    Canonical out;
    for (const auto &ph : red.relation_phases)
        if (ph != 0)
            out.empty = true;
    if (out.empty)
        return out;
    for (std::size_t i = 0; i < red.basis.size(); ++i)
        out.equations.push_back({std::move(red.basis[i]), red.phases[i]});
    return out;
}

} // namespace

TranslatedSubtorus::TranslatedSubtorus(std::size_t r, const std::vector<TorusEquation> &equations)
    : r_(r) {
    IntegerMatrix rows;
    std::vector<Rational> phases;
    for (const auto &eq : equations) {
        check_dim(r, eq.v.size(), "torus equation");
        if (std::all_of(eq.v.begin(), eq.v.end(), [](const Integer &z) { return z == 0; }))
            throw DomainError("torus equation with zero exponent vector");
        rows.push_back(eq.v);
        phases.push_back(eq.phase);
    }
    auto c = canonicalize(r, std::move(rows), std::move(phases));
    equations_ = std::move(c.equations);
    empty_ = c.empty;
}

HermiteReduction TranslatedSubtorus::reduction() const {
    HermiteReduction h;
    h.cols = r_;
    for (const auto &eq : equations_) {
        h.basis.push_back(eq.v);
        h.phases.push_back(eq.phase);
        std::size_t p = 0;
        while (eq.v[p] == 0)
            ++p;
        h.pivots.push_back(p);
    }
    return h;
}

bool TranslatedSubtorus::contains(const CharacterPoint &chi) const {
    check_dim(r_, chi.dim(), "character");
    if (empty_)
        return false;
    for (const auto &eq : equations_) {
        Rational s = -eq.phase;
        for (std::size_t i = 0; i < r_; ++i)
            s += Rational(eq.v[i]) * chi[i];
        if (mod_one(s) != 0)
            return false;
    }
    return true;
}

bool TranslatedSubtorus::subset_of(const TranslatedSubtorus &other) const {
    check_dim(r_, other.r_, "torus containment");
    if (empty_)
        return true;
    if (other.empty_)
        return false;
    const auto h = reduction();
    for (const auto &eq : other.equations_) {
        auto phase = lattice_phase(h, eq.v);
        if (!phase || *phase != eq.phase)
            return false;
    }
    return true;
}

bool TranslatedSubtorus::in_coordinate_slice(std::size_t i) const {
    if (i >= r_)
        throw DimensionError("coordinate index out of range");
    std::vector<Integer> e(r_, 0);
    e[i] = 1;
    return subset_of(TranslatedSubtorus(r_, {{e, Rational(0)}}));
}

TranslatedSubtorus TranslatedSubtorus::drop_coordinate(std::size_t i) const {
    if (i >= r_ || r_ < 2)
        throw DimensionError("cannot drop coordinate " + std::to_string(i));
    if (!in_coordinate_slice(i))
        throw DomainError("torus is not contained in the coordinate slice t_" +
                          std::to_string(i + 1) + " = 1");
    IntegerMatrix rows;
    std::vector<Rational> phases;
    for (const auto &eq : equations_) {
        std::vector<Integer> w;
        for (std::size_t j = 0; j < r_; ++j)
            if (j != i)
                w.push_back(eq.v[j]);
        rows.push_back(std::move(w));
        phases.push_back(eq.phase);
    }
    TranslatedSubtorus out(r_ - 1, {});
    auto c = canonicalize(r_ - 1, std::move(rows), std::move(phases));
    out.empty_ = c.empty || empty_;
    if (!out.empty_)
        out.equations_ = std::move(c.equations);
    return out;
}

TranslatedSubtorus TranslatedSubtorus::extend_trivially(std::size_t i) const {
    if (i > r_)
        throw DimensionError("insertion slot out of range");
    std::vector<TorusEquation> eqs;
    for (const auto &eq : equations_) {
        auto w = eq.v;
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), Integer(0));
        eqs.push_back({std::move(w), eq.phase});
    }
    std::vector<Integer> e(r_ + 1, 0);
    e[i] = 1;
    eqs.push_back({std::move(e), Rational(0)});
    TranslatedSubtorus out(r_ + 1, eqs);
    out.empty_ = out.empty_ || empty_;
    if (out.empty_)
        out.equations_.clear();
    return out;
}

// --- principal components ----------------------------------------------------

PrincipalComponent exp_face(const FaceOfQuasiadjunction &face, std::size_t k, std::size_t l,
                            std::size_t source_face) {
    const std::size_t r = face.sample.dim();
    if (k == 0 || l == 0)
        throw DomainError("principal component labels must be positive");
    IntegerMatrix normals;
    for (const auto &f : face.tight_forms) {
        check_dim(r, f.dim(), "face form");
        normals.push_back(f.coeffs);
    }
    for (const auto &f : box_tight_forms(face.sample))
        normals.push_back(f.coeffs);
    // The closure of exp of an open piece of an affine subspace is cut out by
    // the integer vectors orthogonal to its direction space.
    std::vector<TorusEquation> eqs;
    for (auto &w : saturate(normals, r)) {
        Rational phase = 0;
        for (std::size_t i = 0; i < r; ++i)
            phase += Rational(w[i]) * face.sample[i];
        eqs.push_back({std::move(w), mod_one(phase)});
    }
    return PrincipalComponent{TranslatedSubtorus(r, eqs), k, l, source_face};
}

std::vector<PrincipalComponent> principal_components(
    std::span<const FaceOfQuasiadjunction> faces) {
    std::vector<PrincipalComponent> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (const auto &[l, k] : faces[i].labels)
            if (k > 0 && l > 0)
                out.push_back(exp_face(faces[i], k, l, i));
    return out;
}

bool contains_character(const PrincipalComponent &c, const CharacterPoint &chi) {
    return c.torus.contains(chi);
}

std::size_t principal_f(const CharacterPoint &chi, std::span<const PrincipalComponent> comps) {
    std::size_t f = 0;
    for (const auto &c : comps)
        if (c.k > f && c.torus.contains(chi))
            f = c.k;
    return f;
}

// --- torsion characters ------------------------------------------------------

TorsionCharacters::TorsionCharacters(std::vector<long> m, unsigned long long cap)
    : m_(std::move(m)) {
    unsigned long long total = 1;
    for (long mi : m_) {
        if (mi < 1)
            throw InputError("character orders must be positive, got " + std::to_string(mi));
        if (total > cap / static_cast<unsigned long long>(mi))
            throw InputError("number of characters exceeds the cap of " + std::to_string(cap));
        total *= static_cast<unsigned long long>(mi);
    }
    if (total > cap)
        throw InputError("number of characters exceeds the cap of " + std::to_string(cap));
    size_ = static_cast<std::size_t>(total);
}

CharacterPoint TorsionCharacters::operator[](std::size_t index) const {
    if (index >= size_)
        throw DomainError("character index out of range");
    std::vector<Rational> phases(m_.size());
    for (std::size_t i = m_.size(); i-- > 0;) {
        const auto mi = static_cast<std::size_t>(m_[i]);
        phases[i] = make_rational(static_cast<long>(index % mi), m_[i]);
        index /= mi;
    }
    return CharacterPoint(std::move(phases));
}

TorsionCharacters torsion_characters(const std::vector<long> &m, unsigned long long cap) {
    return TorsionCharacters(m, cap);
}

// --- essential components ----------------------------------------------------

EssentialPartition classify_essential(
    std::span<const PrincipalComponent> comps,
    const std::map<std::size_t, std::vector<PrincipalComponent>> &sub) {
    EssentialPartition out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto &torus = comps[c].torus;
        bool nonessential = false;
        for (std::size_t i = 0; i < torus.dim() && !nonessential; ++i) {
            if (torus.dim() < 2 || !torus.in_coordinate_slice(i))
                continue;
            auto it = sub.find(i);
            if (it == sub.end())
                throw DomainError("no subunion data for the union without component " +
                                  std::to_string(i + 1));
            const auto projected = torus.drop_coordinate(i);
            for (const auto &s : it->second)
                if (projected.subset_of(s.torus)) {
                    nonessential = true;
                    break;
                }
        }
        (nonessential ? out.nonessential : out.essential).push_back(c);
    }
    return out;
}

// --- polynomial invariant ----------------------------------------------------

PolynomialInvariant polynomial_invariant(std::span<const PrincipalComponent> comps,
                                         bool exclude_higher_codim) {
    if (comps.empty())
        return {LaurentPolynomial::constant(0, 1), {}};
    const std::size_t r = comps.front().torus.dim();
    PolynomialInvariant out{LaurentPolynomial::constant(r, 1), {}};
    // Galois orbit of a hypersurface t^v = e(a/q): the pair (v, q).
    std::map<std::pair<std::vector<Integer>, Integer>, std::size_t> orbits;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto &torus = comps[c].torus;
        check_dim(r, torus.dim(), "component");
        if (torus.is_empty() || torus.codimension() != 1) {
            if (!exclude_higher_codim)
                throw DomainError("component " + std::to_string(c) + " has codimension " +
                                  std::to_string(torus.codimension()) +
                                  "; the polynomial invariant needs hypersurfaces");
            out.excluded.push_back(c);
            continue;
        }
        const auto &eq = torus.equations().front();
        auto key = std::make_pair(eq.v, Integer(eq.phase.get_den()));
        auto &k = orbits[key];
        k = std::max(k, comps[c].k);
    }
    for (const auto &[key, k] : orbits) {
        const auto &[v, q] = key;
        const auto &phi = cyclotomic_polynomial(to_long(q));
        LaurentPolynomial factor(r);
        for (std::size_t j = 0; j < phi.size(); ++j) {
            if (phi[j] == 0)
                continue;
            LaurentPolynomial::Exponents e(r);
            for (std::size_t i = 0; i < r; ++i)
                e[i] = to_long(v[i]) * static_cast<long>(j);
            factor += LaurentPolynomial::monomial(std::move(e), phi[j]);
        }
        out.polynomial = out.polynomial * factor.pow(k);
    }
    out.polynomial = out.polynomial.normalized();
    return out;
}

} // namespace innc
