#include "innc/errors.hpp"
#include "innc/resolution.hpp"

#include <json.hpp>

#include <initializer_list>
#include <limits>

namespace innc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown(const json &obj, const std::string &path,
                    std::initializer_list<const char *> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char *name : allowed)
            known = known || it.key() == name;
        if (!known)
            throw SchemaError(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
    }
}

const json &require(const json &obj, const std::string &path, const char *field) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw SchemaError(path.empty() ? field : path + "." + field, "missing required field");
    return *it;
}

std::string join(const std::string &path, const std::string &field) {
    return path.empty() ? field : path + "." + field;
}

long as_long(const json &v, const std::string &path) {
    if (!v.is_number_integer())
        throw SchemaError(path, "expected an integer");
    if (v.is_number_unsigned()) {
        auto u = v.get<unsigned long long>();
        if (u > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
            throw SchemaError(path, "integer out of range");
    }
    return v.get<long>();
}

std::string as_string(const json &v, const std::string &path) {
    if (!v.is_string())
        throw SchemaError(path, "expected a string");
    return v.get<std::string>();
}

const json &as_array(const json &v, const std::string &path) {
    if (!v.is_array())
        throw SchemaError(path, "expected a list");
    return v;
}

const json &as_object(const json &v, const std::string &path) {
    if (!v.is_object())
        throw SchemaError(path, "expected a mapping");
    return v;
}

} // namespace

ResolutionData load_resolution(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error &e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    as_object(doc, "<document>");
    reject_unknown(doc, "", {"r", "n", "components", "exceptional", "incidence", "germs"});

    ResolutionData data;
    const long r = as_long(require(doc, "", "r"), "r");
    if (r < 1)
        throw SchemaError("r", "must be positive");
    data.r = static_cast<std::size_t>(r);
    data.n = as_long(require(doc, "", "n"), "n");

    const auto &names = as_array(require(doc, "", "components"), "components");
    for (std::size_t i = 0; i < names.size(); ++i)
        data.component_names.push_back(
            as_string(names[i], "components[" + std::to_string(i) + "]"));

    const auto &exc = as_array(require(doc, "", "exceptional"), "exceptional");
    for (std::size_t k = 0; k < exc.size(); ++k) {
        const std::string path = "exceptional[" + std::to_string(k) + "]";
        as_object(exc[k], path);
        reject_unknown(exc[k], path, {"id", "a", "c"});
        ExceptionalComponent E;
        E.id = as_string(require(exc[k], path, "id"), join(path, "id"));
        const auto &a = as_array(require(exc[k], path, "a"), join(path, "a"));
        for (std::size_t i = 0; i < a.size(); ++i)
            E.a.push_back(as_long(a[i], join(path, "a") + "[" + std::to_string(i) + "]"));
        E.c = as_long(require(exc[k], path, "c"), join(path, "c"));
        data.exceptional.push_back(std::move(E));
    }

    if (auto it = doc.find("incidence"); it != doc.end()) {
        const auto &inc = as_array(*it, "incidence");
        for (std::size_t k = 0; k < inc.size(); ++k) {
            const std::string path = "incidence[" + std::to_string(k) + "]";
            const auto &members = as_array(inc[k], path);
            IncidenceRecord rec;
            for (std::size_t b = 0; b < members.size(); ++b)
                rec.members.push_back(as_string(members[b], path + "[" + std::to_string(b) + "]"));
            data.incidence.push_back(std::move(rec));
        }
    }

    if (auto it = doc.find("germs"); it != doc.end()) {
        const auto &germs = as_array(*it, "germs");
        for (std::size_t k = 0; k < germs.size(); ++k) {
            const std::string path = "germs[" + std::to_string(k) + "]";
            as_object(germs[k], path);
            reject_unknown(germs[k], path, {"label", "degree", "e"});
            GermBasisElement g;
            g.label = as_string(require(germs[k], path, "label"), join(path, "label"));
            g.degree = as_long(require(germs[k], path, "degree"), join(path, "degree"));
            const auto &e = as_object(require(germs[k], path, "e"), join(path, "e"));
            for (auto jt = e.begin(); jt != e.end(); ++jt)
                g.e[jt.key()] = as_long(jt.value(), join(path, "e." + jt.key()));
            data.germs.push_back(std::move(g));
        }
    }

    validate(data);
    return data;
}

std::string serialize_resolution(const ResolutionData &data) {
    ordered_json doc;
    doc["r"] = data.r;
    doc["n"] = data.n;
    doc["components"] = data.component_names;
    doc["exceptional"] = ordered_json::array();
    for (const auto &E : data.exceptional)
        doc["exceptional"].push_back(ordered_json{{"id", E.id}, {"a", E.a}, {"c", E.c}});
    doc["incidence"] = ordered_json::array();
    for (const auto &rec : data.incidence)
        doc["incidence"].push_back(rec.members);
    doc["germs"] = ordered_json::array();
    for (const auto &g : data.germs) {
        ordered_json e = ordered_json::object();
        for (const auto &[id, v] : g.e)
            e[id] = v;
        doc["germs"].push_back(ordered_json{{"label", g.label}, {"degree", g.degree}, {"e", e}});
    }
    return doc.dump(2) + "\n";
}

} // namespace innc
