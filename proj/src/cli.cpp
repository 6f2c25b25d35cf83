#include "gyrokit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gyrokit/morphism.hpp"
#include "gyrokit/moebius.hpp"
#include "gyrokit/properties.hpp"
#include "gyrokit/search.hpp"

namespace gyrokit::cli {

namespace {

using json = nlohmann::ordered_json;

// Usage and I/O problems; mapped to kUsageError.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A table that parsed but is not a gyrogroup; mapped to kPropertyFails.
struct NotAGyrogroup : std::runtime_error {
    json detail;
    NotAGyrogroup(const std::string& what, json d) : std::runtime_error(what), detail(std::move(d)) {}
};

CayleyTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    try {
        return parse_table(in);
    } catch (const ParseError& e) {
        throw UsageError("malformed table '" + path + "': " + e.what());
    }
}

json loop_violations_json(const LoopCheckResult& r) {
    auto arr = json::array();
    for (const auto& v : r.violations) {
        json cells = json::array();
        for (auto [a, b] : v.cells) cells.push_back({a, b});
        arr.push_back({{"kind", to_string(v.kind)}, {"cells", std::move(cells)}});
    }
    return arr;
}

json axiom_violations_json(const std::vector<AxiomViolation>& vs) {
    auto arr = json::array();
    for (const auto& v : vs) arr.push_back({{"axiom", to_string(v.axiom)}, {"witnesses", v.witnesses}});
    return arr;
}

Gyrogroup load_gyrogroup(const std::string& path) {
    auto t = load_table(path);
    auto loop = validate_loop(t);
    if (!loop.valid)
        throw NotAGyrogroup("'" + path + "' is not a loop table", {{"loop_violations", loop_violations_json(loop)}});
    auto v = validate_gyrogroup(t);
    if (!v)
        throw NotAGyrogroup("'" + path + "' is not a gyrogroup",
                            {{"axiom_violations", axiom_violations_json(v.violations)}});
    return std::move(*v.gyrogroup);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string list_text(const std::vector<Element>& m) {
    std::string s = "{";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "}";
}

std::vector<Element> parse_element_list(const std::string& text) {
    std::vector<Element> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0) throw UsageError("--normal: '" + item + "' is not an element index");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("--normal: empty element list");
    return out;
}

struct Context {
    bool as_json = false;
    std::ostream& out;
    std::ostream& err;
};

int cmd_verify(Context& ctx, const std::string& path) {
    auto t = load_table(path);
    json j;
    j["file"] = path;
    j["order"] = t.order();
    auto loop = validate_loop(t);
    j["loop"] = loop.valid;
    j["loop_violations"] = loop_violations_json(loop);
    int code = kSuccess;
    std::ostringstream human;
    human << "file: " << path << "\norder: " << t.order() << "\nloop: " << yes(loop.valid) << "\n";
    if (!loop.valid) {
        for (const auto& v : loop.violations) {
            human << "  violation " << to_string(v.kind) << " at";
            for (auto [a, b] : v.cells) human << " (" << a << "," << b << ")";
            human << "\n";
        }
        human << "gyrogroup: no\n";
        j["gyrogroup"] = false;
        j["group"] = false;
        code = kPropertyFails;
    } else {
        auto v = validate_gyrogroup(t);
        j["gyrogroup"] = static_cast<bool>(v);
        j["group"] = v && v.gyrogroup->is_group();
        j["axiom_violations"] = axiom_violations_json(v.violations);
        if (v) {
            human << "gyrogroup: yes, group: " << yes(v.gyrogroup->is_group()) << "\n";
            const bool gc = is_gyrocommutative(*v.gyrogroup);
            j["gyrocommutative"] = gc;
            human << "gyrocommutative: " << yes(gc) << "\n";
        } else {
            human << "gyrogroup: no\n";
            for (const auto& a : v.violations) human << "  axiom " << to_string(a.axiom) << " fails at " << list_text(a.witnesses) << "\n";
            code = kPropertyFails;
        }
    }
    if (ctx.as_json) ctx.out << j.dump(2) << "\n";
    else ctx.out << human.str();
    return code;
}

int cmd_search(Context& ctx, const SearchOptions& opts, const std::string& out_dir) {
    SearchResult r;
    try {
        r = enumerate_gyrogroups(opts);
    } catch (const SearchBoundError& e) {
        throw UsageError(e.what());
    }
    if (!out_dir.empty()) write_search_output(r, out_dir);
    if (ctx.as_json) {
        ctx.out << search_manifest(r).dump(2) << "\n";
    } else {
        std::size_t groups = 0;
        for (const auto& t : r.classes) groups += validate_gyrogroup(t).gyrogroup->is_group();
        ctx.out << "order " << r.order << ": " << r.classes.size() << " isomorphism classes (" << groups
                << " groups, " << r.classes.size() - groups << " proper gyrogroups)\n"
                << "nodes: " << r.nodes << ", labelled Bol loops: " << r.bol_loops
                << ", labelled gyrogroups: " << r.labelled << "\n"
                << (r.complete ? "complete\n" : "INCOMPLETE: node budget exhausted\n");
        if (!out_dir.empty()) ctx.out << "written to " << out_dir << "\n";
    }
    if (!r.complete) ctx.err << "search incomplete: node budget " << opts.budget << " exhausted\n";
    return r.complete ? kSuccess : kPropertyFails;
}

int cmd_analyze(Context& ctx, const std::string& path, std::size_t bound) {
    auto g = load_gyrogroup(path);
    AnalysisReport r;
    try {
        r = analyze(g, bound);
    } catch (const EnumerationBoundError& e) {
        throw UsageError(e.what());
    }
    if (ctx.as_json) {
        ctx.out << to_json(r).dump(2) << "\n";
        return kSuccess;
    }
    auto& o = ctx.out;
    o << "order: " << r.order << "\nelement orders:";
    for (auto k : r.element_orders) o << ' ' << k;
    o << "\ngroup: " << yes(r.is_group) << "\ngyrocommutative: " << yes(r.is_gyrocommutative)
      << "\nlagrange: " << yes(r.lagrange_ok) << "\nwcp: " << yes(r.wcp) << "\nscp: " << yes(r.scp)
      << "\nsubgyrogroups: " << r.subgyrogroups.size() << "\n";
    for (const auto& s : r.subgyrogroups)
        o << "  " << list_text(s.members) << " size " << s.members.size() << (s.is_subgroup ? " subgroup" : "")
          << (s.is_normal ? " normal" : "") << "\n";
    o << "notes:\n";
    for (const auto& n : r.classification_notes) o << "  " << n << "\n";
    return kSuccess;
}

int cmd_check(Context& ctx, const std::string& property, const std::string& path, std::size_t bound) {
    auto g = load_gyrogroup(path);
    json j;
    j["property"] = property;
    j["file"] = path;
    bool holds = false;
    std::string detail;
    try {
        if (property == "lagrange") {
            auto r = check_lagrange(g, bound);
            holds = r.holds;
            j["evidence"] = to_json(r)["evidence"];
            for (const auto& e : r.evidence)
                detail += "  " + list_text(e.members) + " size " + std::to_string(e.members.size()) +
                          (e.divides ? " divides " : " does NOT divide ") + std::to_string(r.order) + "\n";
        } else if (property == "wcp") {
            holds = has_wcp(g);
            j["element_orders"] = element_orders(g);
            j["prime_divisors"] = prime_divisors(g.order());
        } else if (property == "scp") {
            holds = has_scp(g, bound);
            auto subs = all_subgyrogroups(g, bound);
            auto arr = json::array();
            for (const auto& h : subs) {
                const bool w = has_wcp(g, h);
                arr.push_back({{"members", h.members}, {"wcp", w}});
                if (!w) detail += "  " + list_text(h.members) + " lacks the weak Cauchy property\n";
            }
            j["subgyrogroups"] = std::move(arr);
        } else if (property == "gyrocommutative") {
            holds = is_gyrocommutative(g);
        } else if (property == "structure") {
            auto r = check_structure(g);
            holds = r.all_hold();
            j["laws"] = to_json(r)["laws"];
            for (const auto& l : r.laws)
                detail += "  " + l.law + ": " + (l.holds ? "holds" : "FAILS at " + list_text(l.witness)) + "\n";
        } else {
            throw UsageError("unknown property '" + property + "'");
        }
    } catch (const EnumerationBoundError& e) {
        throw UsageError(e.what());
    }
    j["holds"] = holds;
    if (ctx.as_json) ctx.out << j.dump(2) << "\n";
    else ctx.out << property << ": " << (holds ? "holds" : "fails") << "\n" << detail;
    return holds ? kSuccess : kPropertyFails;
}

int cmd_quotient(Context& ctx, const std::string& path, const std::string& normal) {
    auto g = load_gyrogroup(path);
    std::vector<Element> members;
    try {
        members = normalize_members(g, parse_element_list(normal));
    } catch (const std::out_of_range& e) {
        throw UsageError(std::string("--normal: ") + e.what());
    }
    json j;
    j["file"] = path;
    j["normal"] = members;
    if (!is_subgyrogroup(g, members)) {
        j["is_subgyrogroup"] = false;
        j["is_normal"] = false;
        if (ctx.as_json) ctx.out << j.dump(2) << "\n";
        else ctx.out << list_text(members) << " is not a subgyrogroup\n";
        return kPropertyFails;
    }
    j["is_subgyrogroup"] = true;
    SubSet n;
    n.members = members;
    n.is_subgyrogroup = Tri::Yes;
    auto r = is_normal(g, n);
    j["is_normal"] = r.normal;
    if (!r) {
        j["reason"] = r.reason;
        if (ctx.as_json) ctx.out << j.dump(2) << "\n";
        else ctx.out << list_text(members) << " is not normal: " << r.reason << "\n";
        return kPropertyFails;
    }
    const auto& q = *r.witness;
    j["cosets"] = q.cosets;
    j["projection"] = to_json(q.projection);
    j["quotient"] = serialize_table(q.quotient.table());
    j["quotient_is_gyrocommutative"] = is_gyrocommutative(q.quotient);
    if (ctx.as_json) {
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << "# quotient by " << list_text(members) << "; cosets:";
        for (std::size_t i = 0; i < q.cosets.size(); ++i) ctx.out << ' ' << i << '=' << list_text(q.cosets[i]);
        ctx.out << "\n" << serialize_table(q.quotient.table());
    }
    return kSuccess;
}

int cmd_iso(Context& ctx, const std::string& path_a, const std::string& path_b) {
    auto g = load_gyrogroup(path_a);
    auto h = load_gyrogroup(path_b);
    json j;
    std::string verdict;
    std::optional<Morphism> iso;
    if (g.order() != h.order()) verdict = "orders differ";
    else if (order_profile(g) != order_profile(h)) verdict = "order profiles differ";
    else if (!(iso = find_isomorphism(g, h))) verdict = "no isomorphism exists";
    j["isomorphic"] = iso.has_value();
    if (iso) j["map"] = to_json(*iso);
    else j["reason"] = verdict;
    if (ctx.as_json) {
        ctx.out << j.dump(2) << "\n";
    } else if (iso) {
        ctx.out << "isomorphic: " << list_text(iso->map) << "\n";
    } else {
        ctx.out << "not isomorphic: " << verdict << "\n";
    }
    return iso ? kSuccess : kPropertyFails;
}

int cmd_moebius(Context& ctx, std::size_t samples, std::uint64_t seed, double tol, double radius, bool corrupt) {
    if (samples == 0) throw UsageError("--samples must be positive");
    if (!(tol > 0)) throw UsageError("--tol must be positive");
    if (!(radius > 0 && radius < 1)) throw UsageError("--radius must lie in (0, 1)");
    auto r = corrupt ? moebius::m_check_axioms(samples, seed, tol, radius, moebius::corrupted_add)
                     : moebius::m_check_axioms(samples, seed, tol, radius);
    auto j = moebius::to_json(r);
    j["seed"] = seed;
    j["radius"] = radius;
    j["operation"] = corrupt ? "corrupted (denominator dropped)" : "moebius";
    ctx.out << j.dump(2) << "\n";
    return r.pass ? kSuccess : kPropertyFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite gyrogroup toolkit: validate, enumerate and analyze gyrogroup tables", "gyrokit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit one JSON document on standard output");

    std::string file, file_b, property, normal, out_dir;
    std::size_t bound = kDefaultEnumerationBound;

    auto* verify = app.add_subcommand("verify", "Check loop and gyrogroup axioms of a .gyt table");
    verify->add_option("file", file, "Table file")->required();

    SearchOptions sopts;
    auto* search = app.add_subcommand("search", "Enumerate gyrogroups of a given order up to isomorphism");
    search->add_option("--order", sopts.order, "Order n")->required();
    search->add_option("--out", out_dir, "Write g{n}_{i}.gyt files and manifest.json here");
    search->add_option("--budget", sopts.budget, "Backtracking node budget");
    search->add_option("--jobs", sopts.jobs, "Parallel workers (default: hardware concurrency)");
    search->add_option("--max-order", sopts.max_order, "Largest order accepted");

    auto* an = app.add_subcommand("analyze", "Full analysis report");
    an->add_option("file", file, "Table file")->required();
    an->add_option("--bound", bound, "Subgyrogroup enumeration bound");

    auto* check = app.add_subcommand("check", "Check one property");
    check->add_option("property", property, "lagrange | wcp | scp | gyrocommutative | structure")
        ->required()
        ->check(CLI::IsMember({"lagrange", "wcp", "scp", "gyrocommutative", "structure"}));
    check->add_option("file", file, "Table file")->required();
    check->add_option("--bound", bound, "Subgyrogroup enumeration bound");

    auto* quot = app.add_subcommand("quotient", "Quotient by a normal subgyrogroup");
    quot->add_option("file", file, "Table file")->required();
    quot->add_option("--normal", normal, "Comma-separated members, e.g. \"0,2\"")->required();

    auto* iso = app.add_subcommand("iso", "Decide isomorphism of two gyrogroups");
    iso->add_option("file_a", file, "First table")->required();
    iso->add_option("file_b", file_b, "Second table")->required();

    std::size_t samples = 10000;
    std::uint64_t seed = 12345;
    double tol = 1e-9, radius = 0.95;
    bool corrupt = false;
    auto* mob = app.add_subcommand("moebius", "Sampled axiom check of the Moebius disk gyrogroup");
    mob->add_option("--samples", samples, "Number of sampled triples");
    mob->add_option("--seed", seed, "Random seed");
    mob->add_option("--tol", tol, "Residual tolerance");
    mob->add_option("--radius", radius, "Sampling radius, < 1");
    mob->add_flag("--corrupt", corrupt, "Negative control: drop the Moebius denominator");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    Context ctx{as_json, out, err};
    try {
        if (*verify) return cmd_verify(ctx, file);
        if (*search) return cmd_search(ctx, sopts, out_dir);
        if (*an) return cmd_analyze(ctx, file, bound);
        if (*check) return cmd_check(ctx, property, file, bound);
        if (*quot) return cmd_quotient(ctx, file, normal);
        if (*iso) return cmd_iso(ctx, file, file_b);
        if (*mob) return cmd_moebius(ctx, samples, seed, tol, radius, corrupt);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NotAGyrogroup& e) {
        err << "error: " << e.what() << "\n";
        if (ctx.as_json) out << json{{"error", e.what()}, {"detail", e.detail}}.dump(2) << "\n";
        else out << e.detail.dump() << "\n";
        return kPropertyFails;
    } catch (const TheoremViolation& e) {
        err << e.what();
        if (ctx.as_json) out << json{{"error", "theorem violation"}, {"theorem", e.theorem()}, {"table", e.table_text()}}.dump(2) << "\n";
        return kPropertyFails;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace gyrokit::cli
