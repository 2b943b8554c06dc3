#include "innc/report.hpp"

#include <sstream>

namespace innc {

namespace {

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string linear_string(const std::vector<Integer> &coeffs, const std::string &var) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Integer &c = coeffs[i];
        if (c == 0)
            continue;
        const Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.get_str();
        out += var + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Json rational_list(const std::vector<Rational> &v) {
    Json out = Json::array();
    for (const auto &q : v)
        out.push_back(to_string(q));
    return out;
}

Json integer_list(const std::vector<Integer> &v) {
    Json out = Json::array();
    for (const auto &z : v)
        out.push_back(to_long(z));
    return out;
}

} // namespace

std::string equation_string(const AffineForm &form) {
    bool flip = false;
    for (const auto &c : form.coeffs)
        if (c != 0) {
            flip = c < 0;
            break;
        }
    std::vector<Integer> coeffs = form.coeffs;
    Rational rhs = form.constant;
    if (flip) {
        for (auto &c : coeffs)
            c = -c;
        rhs = -rhs;
    }
    return linear_string(coeffs, "x") + " = " + to_string(rhs);
}

std::string torus_equation_string(const TorusEquation &eq) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < eq.v.size(); ++i) {
        if (eq.v[i] == 0)
            continue;
        std::string f = "t" + std::to_string(i + 1);
        if (eq.v[i] != 1)
            f += "^" + eq.v[i].get_str();
        factors.push_back(f);
    }
    std::string rhs;
    if (eq.phase == 0)
        rhs = "1";
    else if (eq.phase == Rational(1, 2))
        rhs = "-1";
    else
        rhs = "exp(2 pi i " + to_string(eq.phase) + ")";
    return join(factors, " ") + " = " + rhs;
}

std::string univariate_string(const LaurentPolynomial &p) {
    std::string s = p.to_string();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (s[i] == 't' && i + 1 < s.size() && s[i + 1] == '1')
            ++i;
    }
    return out;
}

Json to_json(const FaceOfQuasiadjunction &face) {
    Json j;
    Json eqs = Json::array();
    for (const auto &f : face.tight_forms)
        eqs.push_back({{"coeffs", integer_list(f.coeffs)},
                       {"constant", to_string(f.constant)},
                       {"text", equation_string(f)}});
    j["equations"] = eqs;
    j["tight_exceptional"] = face.tight_exceptional;
    j["dim"] = face.dim;
    Json labels = Json::array();
    for (const auto &[l, k] : face.labels)
        labels.push_back({{"k", k}, {"l", l}});
    j["labels"] = labels;
    Json wit = Json::object();
    for (const auto &[l, germs] : face.witnesses)
        wit[std::to_string(l)] = germs;
    j["witnesses"] = wit;
    j["sample"] = rational_list(face.sample.coords());
    j["source_germ"] = face.source_germ;
    return j;
}

Json to_json(const TranslatedSubtorus &torus) {
    Json eqs = Json::array();
    for (const auto &eq : torus.equations())
        eqs.push_back({{"v", integer_list(eq.v)}, {"phase", to_string(eq.phase)}});
    return eqs;
}

Json to_json(const PrincipalComponent &comp) {
    return {{"equations", to_json(comp.torus)},
            {"k", comp.k},
            {"l", comp.l},
            {"codimension", comp.torus.codimension()},
            {"source_face", comp.source_face}};
}

Json to_json(const LaurentPolynomial &p) {
    Json terms = Json::array();
    for (const auto &[e, c] : p.sorted_terms())
        terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
    return {{"terms", terms}, {"text", p.to_string()}};
}

Json to_json(const CharacterPoint &chi) { return rational_list(chi.phases()); }

Json to_json(const BettiTable &table) {
    Json j;
    j["mode"] = to_string(table.mode);
    j["r"] = table.r;
    j["n"] = table.n;
    j[table.mode == CoverMode::milnor ? "order" : "m"] =
        table.mode == CoverMode::milnor ? Json(table.m.at(0)) : Json(table.m);
    j["f_source"] = to_string(table.f_kind);
    j["ranks"] = table.ranks;
    j["characters"] = table.characters;
    if (table.mode != CoverMode::milnor) {
        Json buckets = Json::array();
        for (const auto &[support, sum] : table.buckets) {
            std::vector<std::size_t> one_based;
            for (auto i : support)
                one_based.push_back(i + 1);
            buckets.push_back({{"support", one_based}, {"sum", sum}});
        }
        j["buckets"] = buckets;
    }
    if (table.mode == CoverMode::unbranched)
        j["trivial_summand"] = table.trivial_summand;
    j["trivial_character_unresolved"] = table.trivial_character_unresolved;
    return j;
}

Json to_json(const CharPoly &charpoly) {
    Json factors = Json::array();
    for (const auto &f : charpoly.factors)
        factors.push_back({{"order", f.order}, {"multiplicity", f.multiplicity}});
    return {{"factors", factors},
            {"polynomial", univariate_string(charpoly.polynomial())},
            {"unresolved_at_1", charpoly.unresolved_at_1}};
}

Json to_json(const OracleRecord &record) {
    return {{"character", to_json(record.character)}, {"ranks", record.ranks}, {"f", record.f}};
}

std::string human_face(const FaceOfQuasiadjunction &face, std::size_t index) {
    std::ostringstream os;
    std::vector<std::string> eqs;
    for (const auto &f : face.tight_forms)
        eqs.push_back(equation_string(f));
    os << "face " << index << ": " << join(eqs, ", ") << "  (dim " << face.dim << ")\n";
    std::vector<std::string> sample;
    for (const auto &q : face.sample.coords())
        sample.push_back(to_string(q));
    os << "  sample point: (" << join(sample, ", ") << ")\n";
    os << "  tight exceptional: " << join(face.tight_exceptional, ", ") << "\n";
    for (const auto &[l, k] : face.labels) {
        os << "  (k,l) = (" << k << "," << l << ")";
        auto it = face.witnesses.find(l);
        if (it != face.witnesses.end())
            os << "  witnesses: " << join(it->second, ", ");
        os << "\n";
    }
    return os.str();
}

std::string human_component(const PrincipalComponent &comp, std::size_t index) {
    std::vector<std::string> eqs;
    for (const auto &eq : comp.torus.equations())
        eqs.push_back(torus_equation_string(eq));
    std::ostringstream os;
    os << "component " << index << ": " << join(eqs, ", ") << "  (k=" << comp.k
       << ", l=" << comp.l << ", codim " << comp.torus.codimension() << ", face "
       << comp.source_face << ")\n";
    return os.str();
}

std::string human_table(const BettiTable &table) {
    std::ostringstream os;
    os << "mode: " << to_string(table.mode) << "  r=" << table.r << "  n=" << table.n;
    std::vector<std::string> m;
    for (auto v : table.m)
        m.push_back(std::to_string(v));
    os << (table.mode == CoverMode::milnor ? "  order=" : "  m=(") << join(m, ",")
       << (table.mode == CoverMode::milnor ? "" : ")") << "\n";
    os << "f-values: " << to_string(table.f_kind) << "\n";
    os << "characters summed: " << table.characters << "\n";
    os << "degree  rank\n";
    for (std::size_t p = 0; p < table.ranks.size(); ++p) {
        std::string d = std::to_string(p);
        os << d << std::string(8 - d.size(), ' ') << table.ranks[p];
        if (p + 1 == table.ranks.size() && table.trivial_character_unresolved)
            os << (table.mode == CoverMode::milnor ? "  (eigenvalue 1 not included)"
                                                   : "  (trivial character: lower bound)");
        os << "\n";
    }
    if (table.mode == CoverMode::unbranched)
        os << "trivial character summand: " << table.trivial_summand << "\n";
    return os.str();
}

std::string human_charpoly(const CharPoly &charpoly) {
    std::ostringstream os;
    std::vector<std::string> parts;
    for (const auto &f : charpoly.factors) {
        CharPoly one{{{f.order, 1}}, false};
        std::string base = "(" + univariate_string(one.polynomial()) + ")";
        parts.push_back(f.multiplicity == 1 ? base
                                            : base + "^" + std::to_string(f.multiplicity));
    }
    os << "Delta_n factors away from t = 1: " << (parts.empty() ? "1" : join(parts, " "))
       << "\n";
    if (charpoly.unresolved_at_1)
        os << "multiplicity of t - 1: unresolved\n";
    return os.str();
}

} // namespace innc
