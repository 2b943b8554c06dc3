#include "innc/resolution.hpp"

#include "innc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace innc {

bool GermBasisElement::is_unit() const {
    return degree == 0 &&
           std::all_of(e.begin(), e.end(), [](const auto &kv) { return kv.second == 0; });
}

long GermBasisElement::valuation(const std::string &exceptional_id) const {
    auto it = e.find(exceptional_id);
    if (it == e.end())
        throw DomainError("germ '" + label + "' has no valuation for exceptional component '" +
                          exceptional_id + "'");
    return it->second;
}

bool ConeFamily::is_arrangement() const {
    return std::all_of(degrees.begin(), degrees.end(), [](long d) { return d == 1; });
}

const ExceptionalComponent &ResolutionData::exceptional_by_id(const std::string &id) const {
    for (const auto &E : exceptional)
        if (E.id == id)
            return E;
    throw DomainError("unknown exceptional component '" + id + "'");
}

const GermBasisElement &ResolutionData::germ_by_label(const std::string &label) const {
    for (const auto &g : germs)
        if (g.label == label)
            return g;
    throw DomainError("unknown germ '" + label + "'");
}

const GermBasisElement &ResolutionData::unit_germ() const {
    for (const auto &g : germs)
        if (g.is_unit())
            return g;
    throw DomainError("resolution data has no unit germ");
}

QuasiArray::QuasiArray(std::vector<long> j, std::vector<long> m) : j_(std::move(j)), m_(std::move(m)) {
    if (j_.size() != m_.size())
        throw InputError("quasi-array: " + std::to_string(j_.size()) + " twists but " +
                         std::to_string(m_.size()) + " branching orders");
    for (std::size_t i = 0; i < j_.size(); ++i) {
        if (m_[i] < 1)
            throw InputError("quasi-array: m_" + std::to_string(i + 1) + " must be positive");
        if (j_[i] < 0 || j_[i] > m_[i] - 1)
            throw InputError("quasi-array: j_" + std::to_string(i + 1) + " = " +
                             std::to_string(j_[i]) + " outside [0, " + std::to_string(m_[i] - 1) +
                             "]");
    }
}

CubePoint QuasiArray::cube_point() const {
    std::vector<Rational> x;
    x.reserve(j_.size());
    for (std::size_t i = 0; i < j_.size(); ++i)
        x.push_back(make_rational(j_[i] + 1, m_[i]));
    return CubePoint(std::move(x));
}

void validate(ResolutionData &data) {
    if (data.r < 1)
        throw InputError("r must be positive");
    if (data.n < 1)
        throw InputError("n must be positive");
    if (data.component_names.size() != data.r)
        throw SchemaError("components", "expected " + std::to_string(data.r) + " names, found " +
                                            std::to_string(data.component_names.size()));

    std::set<std::string> ids;
    for (std::size_t k = 0; k < data.exceptional.size(); ++k) {
        const auto &E = data.exceptional[k];
        const std::string path = "exceptional[" + std::to_string(k) + "]";
        if (E.id.empty())
            throw SchemaError(path + ".id", "empty id");
        if (!ids.insert(E.id).second)
            throw InputError("duplicate exceptional id '" + E.id + "'");
        if (E.a.size() != data.r)
            throw SchemaError(path + ".a", "expected " + std::to_string(data.r) + " entries");
        if (std::any_of(E.a.begin(), E.a.end(), [](long v) { return v < 0; }))
            throw SchemaError(path + ".a", "orders must be nonnegative");
        if (std::all_of(E.a.begin(), E.a.end(), [](long v) { return v == 0; }))
            throw InputError("exceptional component '" + E.id +
                             "' has a = 0 for every divisor component and imposes no condition");
        if (E.c < 0)
            throw SchemaError(path + ".c", "must be nonnegative");
    }

    std::set<std::vector<std::string>> records;
    for (std::size_t k = 0; k < data.incidence.size(); ++k) {
        std::set<std::string> members(data.incidence[k].members.begin(),
                                      data.incidence[k].members.end());
        if (members.empty())
            throw SchemaError("incidence[" + std::to_string(k) + "]", "empty incidence record");
        for (const auto &id : members)
            if (!ids.count(id))
                throw SchemaError("incidence[" + std::to_string(k) + "]",
                                  "unknown exceptional id '" + id + "'");
        records.emplace(members.begin(), members.end());
    }
    for (const auto &id : ids)
        records.insert({id});
    for (const auto &rec : records) {
        if (rec.size() > 20)
            throw InputError("incidence record with more than 20 members");
        const std::size_t count = std::size_t{1} << rec.size();
        for (std::size_t mask = 1; mask + 1 < count; ++mask) {
            std::vector<std::string> sub;
            for (std::size_t b = 0; b < rec.size(); ++b)
                if (mask & (std::size_t{1} << b))
                    sub.push_back(rec[b]);
            if (!records.count(sub)) {
                std::ostringstream msg;
                msg << "incidence is not closed under subsets: missing {";
                for (std::size_t b = 0; b < sub.size(); ++b)
                    msg << (b ? ", " : "") << sub[b];
                msg << "}";
                throw InputError(msg.str());
            }
        }
    }
    data.incidence.clear();
    for (const auto &rec : records)
        data.incidence.push_back(IncidenceRecord{rec});
    std::stable_sort(data.incidence.begin(), data.incidence.end(),
                     [](const IncidenceRecord &a, const IncidenceRecord &b) {
                         return a.fold() < b.fold();
                     });

    std::set<std::string> labels;
    for (std::size_t k = 0; k < data.germs.size(); ++k) {
        const auto &g = data.germs[k];
        const std::string path = "germs[" + std::to_string(k) + "]";
        if (g.label.empty())
            throw SchemaError(path + ".label", "empty label");
        if (!labels.insert(g.label).second)
            throw InputError("duplicate germ label '" + g.label + "'");
        if (g.degree < 0)
            throw SchemaError(path + ".degree", "must be nonnegative");
        for (const auto &[id, v] : g.e) {
            if (!ids.count(id))
                throw SchemaError(path + ".e." + id, "unknown exceptional id");
            if (v < 0)
                throw SchemaError(path + ".e." + id, "valuation must be nonnegative");
        }
        for (const auto &id : ids)
            if (!g.e.count(id))
                throw SchemaError(path + ".e", "missing valuation for exceptional component '" +
                                                   id + "'");
    }
    if (std::none_of(data.germs.begin(), data.germs.end(),
                     [](const GermBasisElement &g) { return g.is_unit(); })) {
        if (labels.count("1"))
            throw InputError("germ labelled '1' is not the unit germ");
        GermBasisElement unit{"1", {}, 0};
        for (const auto &id : ids)
            unit.e[id] = 0;
        data.germs.insert(data.germs.begin(), std::move(unit));
    }
}

namespace {

std::string monomial_label(const std::vector<long> &exponents) {
    std::string out;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += "x" + std::to_string(v);
        if (exponents[v] > 1)
            out += "^" + std::to_string(exponents[v]);
    }
    return out.empty() ? "1" : out;
}

// All exponent vectors of the given total degree, lexicographically
// decreasing (x0^s first).
void monomials(std::size_t vars, long degree, std::vector<long> &current, std::size_t pos,
               std::vector<std::vector<long>> &out) {
    if (pos + 1 == vars) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (long k = degree; k >= 0; --k) {
        current[pos] = k;
        monomials(vars, degree - k, current, pos + 1, out);
    }
}

} // namespace

ResolutionData cone_over(const std::vector<long> &degrees, long n, long bound) {
    if (degrees.empty())
        throw InputError("cone_over: need at least one degree");
    if (std::any_of(degrees.begin(), degrees.end(), [](long d) { return d < 1; }))
        throw InputError("cone_over: degrees must be positive");
    if (n < 1)
        throw InputError("cone_over: n must be positive");
    if (bound < 0)
        throw InputError("cone_over: degree bound must be nonnegative");

    ResolutionData data;
    data.r = degrees.size();
    data.n = n;
    for (std::size_t i = 0; i < data.r; ++i)
        data.component_names.push_back("D" + std::to_string(i + 1));
    data.exceptional.push_back(ExceptionalComponent{"E", degrees, n});
    data.incidence.push_back(IncidenceRecord{{"E"}});
    const auto vars = static_cast<std::size_t>(n + 1);
    for (long s = 0; s <= bound; ++s) {
        std::vector<std::vector<long>> exps;
        std::vector<long> current(vars, 0);
        monomials(vars, s, current, 0, exps);
        for (const auto &ex : exps)
            data.germs.push_back(GermBasisElement{monomial_label(ex), {{"E", s}}, s});
    }
    data.family = ConeFamily{degrees, bound};
    validate(data);
    return data;
}

ResolutionData generic_arrangement(std::size_t r, long n, long bound) {
    if (r < 1)
        throw InputError("generic_arrangement: r must be positive");
    return cone_over(std::vector<long>(r, 1), n, bound);
}

ResolutionData restrict_to(const ResolutionData &data, const std::vector<std::size_t> &keep,
                           bool user_asserted) {
    if (keep.empty())
        throw DomainError("restrict_to: empty sub-union");
    for (std::size_t k = 0; k < keep.size(); ++k)
        if (keep[k] >= data.r || (k > 0 && keep[k] <= keep[k - 1]))
            throw DomainError("restrict_to: indices must be sorted, unique and below r");
    if (data.family) {
        std::vector<long> degrees;
        for (auto i : keep)
            degrees.push_back(data.family->degrees[i]);
        return cone_over(degrees, data.n, data.family->bound);
    }
    if (!user_asserted)
        throw DomainError("deleting components of non-builtin data changes the resolution; "
                          "supply sub-union data or assert the projection explicitly");

    ResolutionData out;
    out.r = keep.size();
    out.n = data.n;
    for (auto i : keep)
        out.component_names.push_back(data.component_names[i]);
    std::set<std::string> dropped;
    for (const auto &E : data.exceptional) {
        ExceptionalComponent P{E.id, {}, E.c};
        for (auto i : keep)
            P.a.push_back(E.a[i]);
        if (std::all_of(P.a.begin(), P.a.end(), [](long v) { return v == 0; }))
            dropped.insert(E.id);
        else
            out.exceptional.push_back(std::move(P));
    }
    for (const auto &rec : data.incidence)
        if (std::none_of(rec.members.begin(), rec.members.end(),
                         [&](const std::string &id) { return dropped.count(id) > 0; }))
            out.incidence.push_back(rec);
    for (auto g : data.germs) {
        for (const auto &id : dropped)
            g.e.erase(id);
        out.germs.push_back(std::move(g));
    }
    validate(out);
    return out;
}

ResolutionData delete_component(const ResolutionData &data, std::size_t i, bool user_asserted) {
    if (data.r < 2)
        throw DomainError("delete_component: cannot delete the only component");
    if (i >= data.r)
        throw DomainError("delete_component: index " + std::to_string(i) + " out of range");
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < data.r; ++k)
        if (k != i)
            keep.push_back(k);
    return restrict_to(data, keep, user_asserted);
}

} // namespace innc
