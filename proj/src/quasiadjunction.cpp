#include "innc/quasiadjunction.hpp"

#include "innc/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace innc {

Rational threshold(const ExceptionalComponent &E, const GermBasisElement &phi) {
    return Rational(phi.valuation(E.id) + E.c + 1);
}

AffineForm constraint_form(const ExceptionalComponent &E, const GermBasisElement &phi) {
    AffineForm f;
    long total = 0;
    for (long a : E.a) {
        f.coeffs.emplace_back(-a);
        total += a;
    }
    f.constant = threshold(E, phi) - Rational(total);
    return f;
}

HalfspaceSystem germ_region(const ResolutionData &data, const GermBasisElement &phi) {
    std::vector<AffineForm> forms;
    forms.reserve(data.exceptional.size());
    for (const auto &E : data.exceptional)
        forms.push_back(constraint_form(E, phi));
    return HalfspaceSystem(data.r, std::move(forms));
}

namespace {

std::size_t weight_of(const ResolutionData &data, const std::vector<std::string> &tight) {
    std::size_t weight = 0;
    for (const auto &rec : data.incidence)
        if (std::includes(tight.begin(), tight.end(), rec.members.begin(), rec.members.end()))
            weight = std::max(weight, rec.fold());
    return weight;
}

} // namespace

MembershipVerdict membership_at(const ResolutionData &data, const GermBasisElement &phi,
                                const CubePoint &x) {
    if (x.dim() != data.r)
        throw DimensionError("membership: point of dimension " + std::to_string(x.dim()) +
                             " for r = " + std::to_string(data.r));
    MembershipVerdict v;
    v.in_ideal = true;
    v.in_log_ideal = true;
    for (const auto &E : data.exceptional) {
        Rational value = evaluate_form(constraint_form(E, phi), x);
        if (value >= 0)
            v.in_ideal = false;
        if (value > 0)
            v.in_log_ideal = false;
        if (value == 0)
            v.tight_exceptional.push_back(E.id);
    }
    std::sort(v.tight_exceptional.begin(), v.tight_exceptional.end());
    if (v.in_log_ideal && !v.in_ideal)
        v.weight = weight_of(data, v.tight_exceptional);
    return v;
}

MembershipVerdict membership(const ResolutionData &data, const GermBasisElement &phi,
                             const QuasiArray &q) {
    if (q.dim() != data.r)
        throw DimensionError("membership: quasi-array of length " + std::to_string(q.dim()) +
                             " for r = " + std::to_string(data.r));
    return membership_at(data, phi, q.cube_point());
}

QuotientDims quotient_dims(const ResolutionData &data, const CubePoint &p) {
    QuotientDims out;
    for (const auto &[l, labels] : quotient_witnesses(data, p))
        out[l] = labels.size();
    return out;
}

std::map<std::size_t, std::vector<std::string>> quotient_witnesses(const ResolutionData &data,
                                                                   const CubePoint &p) {
    std::map<std::size_t, std::vector<std::string>> out;
    for (const auto &phi : data.germs) {
        auto v = membership_at(data, phi, p);
        if (v.weight > 0)
            out[v.weight].push_back(phi.label);
    }
    return out;
}

namespace {

using SpanKey = std::vector<std::vector<Rational>>;

struct SpanKeyLess {
    bool operator()(const SpanKey &a, const SpanKey &b) const {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(), [](const auto &x, const auto &y) {
                return std::lexicographical_compare(
                    x.begin(), x.end(), y.begin(), y.end(),
                    [](const Rational &p, const Rational &q) { return p < q; });
            });
    }
};

FaceOfQuasiadjunction make_face(const ResolutionData &data, const GermBasisElement &phi,
                                const HalfspaceSystem &region, const std::vector<std::size_t> &tight,
                                CubePoint sample) {
    std::vector<AffineForm> tight_forms;
    std::vector<std::string> tight_ids;
    for (auto idx : tight) {
        tight_forms.push_back(region.forms()[idx]);
        tight_ids.push_back(data.exceptional[idx].id);
    }
    // The cube facets through a relative-interior point are implicit
    // equalities of the face.
    auto hull = tight_forms;
    for (auto &f : box_tight_forms(sample))
        hull.push_back(std::move(f));
    const int dim = face_dimension(hull);
    auto witnesses = quotient_witnesses(data, sample);
    QuotientDims labels;
    for (const auto &[l, germs] : witnesses)
        labels[l] = germs.size();
    return FaceOfQuasiadjunction{std::move(tight_forms), std::move(tight_ids), region, dim,
                                 std::move(labels), std::move(witnesses), std::move(sample),
                                 phi.label};
}

// Faces of one germ's region, each identified by the exact set of
// constraints tight on its relative interior.
std::vector<FaceOfQuasiadjunction> germ_faces(const ResolutionData &data,
                                              const GermBasisElement &phi) {
    const auto region = germ_region(data, phi);
    const std::size_t count = region.forms().size();
    if (count > 20)
        throw DomainError("more than 20 exceptional components: face enumeration not supported");
    std::vector<FaceOfQuasiadjunction> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        std::vector<AffineForm> eq, ineq;
        std::vector<std::size_t> subset;
        for (std::size_t k = 0; k < count; ++k) {
            if (mask & (std::size_t{1} << k)) {
                eq.push_back(region.forms()[k]);
                subset.push_back(k);
            } else {
                ineq.push_back(region.forms()[k]);
            }
        }
        auto p = relative_interior_point(data.r, ineq, eq);
        if (!p)
            continue;
        // Another constraint tight on the whole piece: the same face is
        // produced by the larger tight set.
        if (tight_set(region, *p) != subset)
            continue;
        out.push_back(make_face(data, phi, region, subset, std::move(*p)));
    }
    return out;
}

} // namespace

std::vector<FaceOfQuasiadjunction> faces_of_quasiadjunction(const ResolutionData &data) {
    if (data.germs.empty())
        throw DomainError("faces_of_quasiadjunction: empty germ basis");
    std::map<SpanKey, FaceOfQuasiadjunction, SpanKeyLess> merged;
    for (const auto &phi : data.germs)
        for (auto &face : germ_faces(data, phi))
            merged.try_emplace(affine_span_key(face.tight_forms), std::move(face));
    std::vector<FaceOfQuasiadjunction> out;
    out.reserve(merged.size());
    for (auto &[key, face] : merged)
        out.push_back(std::move(face));
    return out;
}

bool face_contains(const FaceOfQuasiadjunction &face, const CubePoint &p) {
    if (!contains(face.ambient_system, p))
        return false;
    return std::all_of(face.tight_forms.begin(), face.tight_forms.end(),
                       [&](const AffineForm &f) { return evaluate_form(f, p) == 0; });
}

bool multiplier_ideal_membership(const ResolutionData &data, const GermBasisElement &phi,
                                 const std::vector<Rational> &gamma) {
    if (gamma.size() != data.r)
        throw DimensionError("multiplier ideal: gamma has " + std::to_string(gamma.size()) +
                             " entries for r = " + std::to_string(data.r));
    for (const auto &E : data.exceptional) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < data.r; ++i)
            lhs += Rational(E.a[i]) * gamma[i];
        if (!(lhs < threshold(E, phi)))
            return false;
    }
    return true;
}

FaceOfQuasiadjunction lct_face(const ResolutionData &data) {
    const auto &unit = data.unit_germ();
    auto faces = germ_faces(data, unit);
    if (faces.empty())
        throw DomainError("the log-canonical boundary of the unit germ does not meet the cube");
    std::stable_sort(faces.begin(), faces.end(),
                     [](const auto &a, const auto &b) { return a.dim > b.dim; });
    return std::move(faces.front());
}

Rational log_canonical_threshold(const ResolutionData &data, const std::vector<Rational> &w) {
    if (w.size() != data.r)
        throw DimensionError("log_canonical_threshold: direction of wrong length");
    Rational top = 0;
    for (const auto &v : w) {
        if (v < 0)
            throw DomainError("log_canonical_threshold: negative weight");
        top = std::max(top, v);
    }
    if (top == 0)
        throw DomainError("log_canonical_threshold: zero direction");
    Rational lct = 1 / top;
    for (const auto &E : data.exceptional) {
        Rational s = 0;
        for (std::size_t i = 0; i < data.r; ++i)
            s += Rational(E.a[i]) * w[i];
        if (s > 0)
            lct = std::min(lct, Rational(Rational(E.c + 1) / s));
    }
    return lct;
}

} // namespace innc
