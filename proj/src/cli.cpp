#include "innc/cli.hpp"

#include "innc/errors.hpp"
#include "innc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace innc {

namespace {

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::vector<long> cone;
    long arrangement = 0;
    long n = 2;
    long bound = 0;
    std::vector<long> m;
    long order = 0;
    std::string format = "human";
    std::string out;
    unsigned long long cap = TorsionCharacters::default_cap;
    bool branched = false;
    std::string subunions;

    bool n_given = false;
    bool bound_given = false;
    bool structured() const { return format == "structured"; }
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ResolutionData load_input(const RunConfig &cfg) {
    const int sources = !cfg.input.empty() + !cfg.cone.empty() + (cfg.arrangement != 0);
    if (sources != 1)
        throw InputError("give exactly one of --input, --cone, --arrangement");
    if (cfg.bound < 0)
        throw InputError("--bound must be nonnegative");
    if (!cfg.input.empty()) {
        if (cfg.n_given || cfg.bound_given)
            throw InputError("--n and --bound apply to builtin families only");
        try {
            return load_resolution(read_file(cfg.input));
        } catch (const SchemaError &e) {
            throw SchemaError(e.path(), std::string(e.what()).substr(e.path().size() + 2) +
                                            " (in " + cfg.input + ")");
        }
    }
    if (cfg.n < 1)
        throw InputError("--n must be at least 1");
    if (!cfg.cone.empty())
        return cone_over(cfg.cone, cfg.n, cfg.bound);
    if (cfg.arrangement < 1)
        throw InputError("--arrangement needs a positive number of hyperplanes");
    return generic_arrangement(static_cast<std::size_t>(cfg.arrangement), cfg.n, cfg.bound);
}

Json describe_input(const RunConfig &cfg, const ResolutionData &data) {
    Json j;
    if (!cfg.input.empty()) {
        j["source"] = "input";
        j["path"] = cfg.input;
    } else {
        j["source"] = cfg.cone.empty() ? "arrangement" : "cone";
        j["degrees"] = data.family->degrees;
        j["bound"] = data.family->bound;
    }
    j["r"] = data.r;
    j["n"] = data.n;
    return j;
}

std::string join_ints(const std::vector<std::size_t> &v, std::size_t offset = 0) {
    std::string out;
    for (auto x : v)
        out += (out.empty() ? "" : ", ") + std::to_string(x + offset);
    return out.empty() ? "none" : out;
}

std::vector<PrincipalComponent> components_from_json(const Json &list, std::size_t r,
                                                     const std::string &where) {
    if (!list.is_array())
        throw SchemaError(where, "expected a list of components");
    std::vector<PrincipalComponent> out;
    for (std::size_t c = 0; c < list.size(); ++c) {
        const auto path = where + "[" + std::to_string(c) + "]";
        const auto &item = list[c];
        if (!item.is_object() || !item.contains("equations"))
            throw SchemaError(path + ".equations", "missing required field");
        std::vector<TorusEquation> eqs;
        for (std::size_t e = 0; e < item["equations"].size(); ++e) {
            const auto epath = path + ".equations[" + std::to_string(e) + "]";
            const auto &eq = item["equations"][e];
            if (!eq.contains("v") || !eq["v"].is_array())
                throw SchemaError(epath + ".v", "missing required field");
            std::vector<Integer> v;
            for (const auto &x : eq["v"]) {
                if (!x.is_number_integer())
                    throw SchemaError(epath + ".v", "expected integers");
                v.emplace_back(x.get<long>());
            }
            if (v.size() != r)
                throw SchemaError(epath + ".v", "expected " + std::to_string(r) + " entries");
            Rational phase = 0;
            if (eq.contains("phase")) {
                if (!eq["phase"].is_string())
                    throw SchemaError(epath + ".phase", "expected a rational string");
                phase = parse_rational(eq["phase"].get<std::string>());
            }
            eqs.push_back({std::move(v), phase});
        }
        const auto k = item.value("k", 1L), l = item.value("l", 1L);
        if (k < 1 || l < 1)
            throw SchemaError(path, "k and l must be positive");
        try {
            out.push_back({TranslatedSubtorus(r, eqs), static_cast<std::size_t>(k),
                           static_cast<std::size_t>(l), c});
        } catch (const DomainError &e) {
            throw SchemaError(path, e.what());
        }
    }
    return out;
}

// {"subunions": [{"components": [1, 2], "principal_components": [...]}]}
std::map<ComponentSet, std::vector<PrincipalComponent>> load_subunions(const std::string &path) {
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const Json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("subunions") || !doc["subunions"].is_array())
        throw SchemaError("subunions", "missing required field");
    std::map<ComponentSet, std::vector<PrincipalComponent>> out;
    for (std::size_t s = 0; s < doc["subunions"].size(); ++s) {
        const auto where = "subunions[" + std::to_string(s) + "]";
        const auto &entry = doc["subunions"][s];
        if (!entry.contains("components") || !entry["components"].is_array())
            throw SchemaError(where + ".components", "missing required field");
        ComponentSet set;
        for (const auto &i : entry["components"]) {
            if (!i.is_number_integer() || i.get<long>() < 1)
                throw SchemaError(where + ".components", "expected 1-based component indices");
            set.push_back(static_cast<std::size_t>(i.get<long>() - 1));
        }
        std::sort(set.begin(), set.end());
        out[set] = components_from_json(entry.value("principal_components", Json::array()),
                                        set.size(), where + ".principal_components");
    }
    return out;
}

bool faces_match(const std::vector<FaceOfQuasiadjunction> &a,
                 const std::vector<FaceOfQuasiadjunction> &b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].tight_forms != b[i].tight_forms || a[i].dim != b[i].dim ||
            a[i].labels != b[i].labels)
            return false;
    return true;
}

// --- subcommands -------------------------------------------------------------

void cmd_faces(const RunConfig &cfg, const ResolutionData &data, std::ostream &os) {
    const auto faces = faces_of_quasiadjunction(data);
    std::optional<bool> stable;
    if (data.family) {
        const auto &fam = *data.family;
        const auto next = cone_over(fam.degrees, data.n, fam.bound + 1);
        stable = faces_match(faces, faces_of_quasiadjunction(next));
    }
    if (cfg.structured()) {
        Json doc;
        doc["command"] = "faces";
        doc["input"] = describe_input(cfg, data);
        Json list = Json::array();
        for (const auto &f : faces)
            list.push_back(to_json(f));
        doc["faces"] = list;
        if (stable)
            doc["stabilization"] = {{"checked_bound", data.family->bound + 1},
                                    {"stable", *stable}};
        else
            doc["stabilization"] = nullptr;
        os << doc.dump(2) << "\n";
        return;
    }
    os << faces.size() << (faces.size() == 1 ? " face" : " faces") << " of quasiadjunction\n";
    for (std::size_t i = 0; i < faces.size(); ++i)
        os << human_face(faces[i], i);
    if (!stable)
        os << "stabilization: not checked (germ basis fixed by the input document)\n";
    else if (*stable)
        os << "stabilization: faces unchanged at bound " << data.family->bound + 1 << "\n";
    else
        os << "stabilization: bound " << data.family->bound + 1
           << " changes the faces; raise --bound\n";
}

std::map<std::size_t, std::vector<PrincipalComponent>> deletion_components(
    const ResolutionData &data, const RunConfig &cfg) {
    std::map<std::size_t, std::vector<PrincipalComponent>> sub;
    if (data.r < 2)
        return sub;
    if (data.family) {
        for (std::size_t i = 0; i < data.r; ++i)
            sub[i] = principal_components(faces_of_quasiadjunction(delete_component(data, i)));
    } else if (!cfg.subunions.empty()) {
        auto lists = load_subunions(cfg.subunions);
        for (std::size_t i = 0; i < data.r; ++i) {
            ComponentSet keep;
            for (std::size_t j = 0; j < data.r; ++j)
                if (j != i)
                    keep.push_back(j);
            if (auto it = lists.find(keep); it != lists.end())
                sub[i] = it->second;
        }
    }
    return sub;
}

void cmd_components(const RunConfig &cfg, const ResolutionData &data, std::ostream &os) {
    const auto faces = faces_of_quasiadjunction(data);
    const auto comps = principal_components(faces);
    std::optional<EssentialPartition> partition;
    std::string partition_note;
    try {
        partition = classify_essential(comps, deletion_components(data, cfg));
    } catch (const DomainError &e) {
        partition_note = e.what();
    }
    const auto inv = polynomial_invariant(comps, true);

    if (cfg.structured()) {
        Json doc;
        doc["command"] = "components";
        doc["input"] = describe_input(cfg, data);
        doc["f_source"] = to_string(FKind::principal_lower_bound);
        Json list = Json::array();
        for (const auto &c : comps)
            list.push_back(to_json(c));
        doc["components"] = list;
        if (partition)
            doc["partition"] = {{"essential", partition->essential},
                                {"nonessential", partition->nonessential}};
        else
            doc["partition"] = {{"unavailable", partition_note}};
        doc["polynomial_invariant"] = to_json(inv.polynomial);
        doc["excluded_components"] = inv.excluded;
        os << doc.dump(2) << "\n";
        return;
    }
    os << comps.size() << " principal component" << (comps.size() == 1 ? "" : "s")
       << " (f-values: " << to_string(FKind::principal_lower_bound) << ")\n";
    for (std::size_t i = 0; i < comps.size(); ++i)
        os << human_component(comps[i], i);
    if (partition) {
        os << "essential: " << join_ints(partition->essential) << "\n";
        os << "nonessential: " << join_ints(partition->nonessential) << "\n";
    } else {
        os << "essential/nonessential: unavailable (" << partition_note << ")\n";
    }
    if (!inv.excluded.empty())
        os << "codimension >= 2, excluded from the polynomial invariant: "
           << join_ints(inv.excluded) << "\n";
    os << "polynomial invariant: " << inv.polynomial.to_string() << "\n";
}

void cmd_betti(const RunConfig &cfg, const ResolutionData &data, std::ostream &os) {
    if (cfg.m.empty())
        throw InputError("betti needs --m");
    BettiTable table;
    if (cfg.branched) {
        SubunionSource subs;
        if (data.family)
            subs = builtin_subunions(data);
        else if (!cfg.subunions.empty())
            subs = supplied_subunions(load_subunions(cfg.subunions));
        else
            throw InputError("branched covers of input documents need --subunions");
        table = betti_branched(data.r, data.n, subs, cfg.m, cfg.cap);
    } else {
        const auto comps = principal_components(faces_of_quasiadjunction(data));
        table = betti_unbranched(data.r, data.n, default_source(data, comps), cfg.m, cfg.cap);
    }
    if (cfg.structured()) {
        Json doc;
        doc["command"] = "betti";
        doc["input"] = describe_input(cfg, data);
        doc["table"] = to_json(table);
        os << doc.dump(2) << "\n";
        return;
    }
    os << human_table(table);
}

void cmd_milnor(const RunConfig &cfg, const ResolutionData &data, std::ostream &os) {
    if (cfg.order < 1)
        throw InputError("milnor needs --order N with N >= 1");
    const auto comps = principal_components(faces_of_quasiadjunction(data));
    const auto res = milnor_fiber(data.r, data.n, default_source(data, comps), cfg.order);
    if (cfg.structured()) {
        Json doc;
        doc["command"] = "milnor";
        doc["input"] = describe_input(cfg, data);
        doc["table"] = to_json(res.table);
        doc["multiplicities"] = res.multiplicities;
        doc["charpoly"] = to_json(res.charpoly);
        os << doc.dump(2) << "\n";
        return;
    }
    os << human_table(res.table);
    os << "m_omega for omega = exp(2 pi i j/" << cfg.order << "), j = 1.." << cfg.order - 1
       << ":";
    for (auto m : res.multiplicities)
        os << " " << m;
    os << "\n" << human_charpoly(res.charpoly);
}

void require_oracle(const ResolutionData &data) {
    if (!data.family || !data.family->is_arrangement())
        throw InputError("oracle unavailable: the Koszul oracle covers generic hyperplane "
                         "arrangements only (use --arrangement)");
}

std::string phases_string(const CharacterPoint &chi) {
    std::string out = "(";
    for (std::size_t i = 0; i < chi.dim(); ++i)
        out += (i ? ", " : "") + to_string(chi[i]);
    return out + ")";
}

void cmd_oracle(const RunConfig &cfg, const ResolutionData &data, std::ostream &os) {
    require_oracle(data);
    if (cfg.order < 1)
        throw InputError("oracle needs --order M with M >= 1");
    const auto records = oracle_sweep(data.r, static_cast<std::size_t>(data.n), cfg.order);
    if (cfg.structured()) {
        Json doc;
        doc["command"] = "oracle";
        doc["input"] = describe_input(cfg, data);
        doc["order"] = cfg.order;
        Json list = Json::array();
        for (const auto &rec : records)
            list.push_back(to_json(rec));
        doc["records"] = list;
        os << doc.dump(2) << "\n";
        return;
    }
    os << "character  homology ranks (degrees 0.." << data.n << ")  f\n";
    std::size_t support = 0;
    for (const auto &rec : records) {
        os << phases_string(rec.character) << " ";
        for (auto v : rec.ranks)
            os << " " << v;
        os << "  f=" << rec.f << "\n";
        support += rec.f > 0;
    }
    os << records.size() << " characters, " << support << " in the support\n";
}

int cmd_check(const RunConfig &cfg, const ResolutionData &data, std::ostream &os) {
    require_oracle(data);
    if (cfg.order < 1)
        throw InputError("check needs --order M with M >= 1");
    const auto records = oracle_sweep(data.r, static_cast<std::size_t>(data.n), cfg.order);
    const auto comps = principal_components(faces_of_quasiadjunction(data));

    std::size_t support_agree = 0, on_support = 0, on_support_agree = 0;
    std::size_t nontrivial = 0, nontrivial_agree = 0;
    Json mismatches = Json::array();
    std::size_t trivial_oracle = 0, trivial_principal = 0;
    for (const auto &rec : records) {
        const auto &chi = rec.character;
        const auto pf = principal_f(chi, comps);
        Rational total = 0;
        for (const auto &p : chi.phases())
            total += p;
        const bool predicate = mod_one(total) == 0 && pf > 0;
        const bool ok_support = (rec.f > 0) == predicate;
        support_agree += ok_support;
        if (rec.f > 0) {
            ++on_support;
            on_support_agree += pf > 0;
        }
        bool ok_value = true;
        if (chi.is_trivial()) {
            trivial_oracle = rec.f;
            trivial_principal = pf;
        } else if (rec.f > 0 || pf > 0) {
            ++nontrivial;
            ok_value = pf == rec.f;
            nontrivial_agree += ok_value;
        }
        if (!ok_support || !ok_value)
            mismatches.push_back({{"character", to_json(chi)}, {"oracle_f", rec.f},
                                  {"principal_f", pf}});
    }
    const bool pass = mismatches.empty();
    if (cfg.structured()) {
        Json doc;
        doc["command"] = "check";
        doc["input"] = describe_input(cfg, data);
        doc["order"] = cfg.order;
        doc["characters"] = records.size();
        doc["support_agree"] = support_agree;
        doc["on_support"] = on_support;
        doc["on_support_agree"] = on_support_agree;
        doc["nontrivial"] = nontrivial;
        doc["nontrivial_f_agree"] = nontrivial_agree;
        doc["trivial_character"] = {{"oracle_f", trivial_oracle},
                                    {"principal_f", trivial_principal}};
        doc["mismatches"] = mismatches;
        doc["pass"] = pass;
        os << doc.dump(2) << "\n";
    } else {
        os << "support: " << support_agree << "/" << records.size() << " characters agree\n";
        os << "on support: " << on_support_agree << "/" << on_support << " characters agree\n";
        os << "f-values (nontrivial, on support): " << nontrivial_agree << "/" << nontrivial
           << " characters agree\n";
        os << "trivial character: oracle f = " << trivial_oracle << ", principal f = "
           << trivial_principal << " (lower bound, not compared)\n";
        for (const auto &m : mismatches)
            os << "mismatch: " << m.dump() << "\n";
        os << (pass ? "check passed\n" : "check FAILED\n");
    }
    return pass ? 0 : 2;
}

void add_common(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--input", cfg.input, "resolution document (JSON)");
    sub->add_option("--cone", cfg.cone, "cone over hypersurfaces of degrees d1,d2,...")
        ->delimiter(',');
    sub->add_option("--arrangement", cfg.arrangement, "R generic hyperplanes");
    sub->add_option("--n", cfg.n, "ambient dimension is n+1 (default 2)");
    sub->add_option("--bound", cfg.bound, "germ basis degree bound (default 0)");
    sub->add_option("--format", cfg.format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));
    sub->add_option("--out", cfg.out, "write the report to PATH");
    sub->add_option("--cap", cfg.cap, "maximal number of characters to enumerate");
    sub->add_option("--subunions", cfg.subunions,
                    "sub-union components for input documents (JSON)");
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Invariants of isolated non-normal-crossing singularities", "innc"};
    app.require_subcommand(1);
    auto *faces = app.add_subcommand("faces", "faces of quasiadjunction");
    auto *components = app.add_subcommand("components", "principal components");
    auto *betti = app.add_subcommand("betti", "homology ranks of abelian covers");
    auto *milnor = app.add_subcommand("milnor", "Milnor fiber ranks and monodromy");
    auto *oracle = app.add_subcommand("oracle", "Koszul oracle sweep");
    auto *check = app.add_subcommand("check", "cross-check principal components with the oracle");
    for (auto *sub : {faces, components, betti, milnor, oracle, check})
        add_common(sub, cfg);
    betti->add_option("--m", cfg.m, "branching orders m1,...,mr")->delimiter(',');
    betti->add_flag("--branched", cfg.branched, "branched cover of the sphere");
    for (auto *sub : {milnor, oracle, check})
        sub->add_option("--order", cfg.order, "character order bound");

    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty())
        rest.pop_back();
    try {
        app.parse(rest);
    } catch (const CLI::ParseError &e) {
        // CLI11 uses its own codes; a usage error is an input error here
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    for (auto *sub : app.get_subcommands()) {
        cfg.subcommand = sub->get_name();
        cfg.n_given = sub->count("--n") > 0;
        cfg.bound_given = sub->count("--bound") > 0;
    }

    try {
        const auto data = load_input(cfg);
        std::ostringstream report;
        int code = 0;
        if (cfg.subcommand == "faces")
            cmd_faces(cfg, data, report);
        else if (cfg.subcommand == "components")
            cmd_components(cfg, data, report);
        else if (cfg.subcommand == "betti")
            cmd_betti(cfg, data, report);
        else if (cfg.subcommand == "milnor")
            cmd_milnor(cfg, data, report);
        else if (cfg.subcommand == "oracle")
            cmd_oracle(cfg, data, report);
        else
            code = cmd_check(cfg, data, report);
        if (cfg.out.empty()) {
            out << report.str();
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file || !(file << report.str()))
                throw InputError("cannot write '" + cfg.out + "'");
        }
        return code;
    } catch (const InconsistencyError &e) {
        err << "inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace innc
