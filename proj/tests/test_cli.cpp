#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gyrokit/cli.hpp"
#include "gyrokit/groups.hpp"
#include "support.hpp"

using namespace gyrokit;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gyrokit");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Files {
    std::filesystem::path dir = testkit::temp_dir("cli");
    std::string put(const std::string& name, const std::string& text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
    std::string put(const std::string& name, const CayleyTable& t) { return put(name, serialize_table(t)); }
    ~Files() { std::filesystem::remove_all(dir); }
};

}  // namespace

TEST_CASE("verify") {
    Files f;
    auto r = run({"verify", f.put("z4.gyt", cyclic_group_table(4))});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("gyrogroup: yes, group: yes") != std::string::npos);

    r = run({"verify", f.put("g8.gyt", testkit::g8_table())});
    CHECK(r.code == 0);
    CHECK(r.out.find("gyrogroup: yes, group: no") != std::string::npos);

    r = run({"verify", f.put("bad.gyt", "3\n0 1 2\n1 1 0\n2 0 1\n")});
    CHECK(r.code == cli::kPropertyFails);
    CHECK(r.out.find("row-not-permutation") != std::string::npos);

    r = run({"--json", "verify", f.put("bad.gyt", "3\n0 1 2\n1 1 0\n2 0 1\n")});
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["loop"] == false);

    r = run({"verify", f.put("garbage.gyt", "2\n0 x\n1 0\n")});
    CHECK(r.code == cli::kUsageError);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());

    r = run({"verify", (f.dir / "missing.gyt").string()});
    CHECK(r.code == 2);
}

TEST_CASE("verify reports axiom violations for a non-gyrogroup loop") {
    Files f;
    CayleyTable bad;
    for (const auto& t : testkit::all_loops(5))
        if (!testkit::naive_is_gyrogroup(t)) {
            bad = t;
            break;
        }
    auto r = run({"verify", f.put("l5.gyt", bad), "--json"});
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["gyrogroup"] == false);
    CHECK_FALSE(j["axiom_violations"].empty());
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"search"}).code == 2);
    CHECK(run({"search", "--order", "x"}).code == 2);
    CHECK(run({"search", "--order", "12"}).code == 2);
    CHECK(run({"check", "associativity", "x.gyt"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("search") != std::string::npos);
}

TEST_CASE("check") {
    Files f;
    const auto g8 = f.put("g8_0.gyt", testkit::g8_table());
    auto r = run({"check", "lagrange", g8, "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["holds"] == true);
    CHECK_FALSE(j["evidence"].empty());
    for (const auto& e : j["evidence"]) CHECK(e["divides_order"] == true);

    CHECK(run({"check", "wcp", g8}).code == 0);
    CHECK(run({"check", "scp", g8}).code == 0);
    CHECK(run({"check", "structure", g8}).code == 0);
    CHECK(run({"check", "gyrocommutative", f.put("s3.gyt", symmetric3_table())}).code == 1);
    CHECK(run({"check", "gyrocommutative", f.put("z6.gyt", cyclic_group_table(6))}).code == 0);
    CHECK(run({"check", "lagrange", g8, "--bound", "4"}).code == 2);
}

TEST_CASE("analyze") {
    Files f;
    auto r = run({"--json", "analyze", f.put("z6.gyt", cyclic_group_table(6))});
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["order"] == 6);
    CHECK(j.begin().key() == "order");
    auto again = run({"--json", "analyze", f.put("z6.gyt", cyclic_group_table(6))});
    CHECK(again.out == r.out);

    r = run({"analyze", f.put("g8.gyt", testkit::g8_table())});
    CHECK(r.code == 0);
    CHECK(r.out.find("lagrange: yes") != std::string::npos);
}

TEST_CASE("quotient") {
    Files f;
    const auto z4 = f.put("z4.gyt", cyclic_group_table(4));
    auto r = run({"quotient", z4, "--normal", "0,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2\n0 1\n1 0\n") != std::string::npos);

    r = run({"quotient", z4, "--normal", "0,1", "--json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["is_subgyrogroup"] == false);

    r = run({"quotient", f.put("s3.gyt", symmetric3_table()), "--normal", "0,3"});
    CHECK(r.code == 1);
    CHECK(r.out.find("not normal") != std::string::npos);

    CHECK(run({"quotient", z4, "--normal", "0,9"}).code == 2);
    CHECK(run({"quotient", z4, "--normal", "a"}).code == 2);
}

TEST_CASE("iso") {
    Files f;
    const auto z4 = f.put("z4.gyt", cyclic_group_table(4));
    const auto k4 = f.put("k4.gyt", klein_four_table());
    auto r = run({"iso", z4, k4});
    CHECK(r.code == 1);
    CHECK(r.out.find("not isomorphic: order profiles differ") != std::string::npos);
    r = run({"iso", z4, f.put("z4b.gyt", relabel(cyclic_group_table(4), std::vector<Element>{0, 3, 1, 2}))});
    CHECK(r.code == 0);
    CHECK(run({"iso", z4, f.put("z3.gyt", cyclic_group_table(3))}).code == 1);
    CHECK(nlohmann::json::parse(run({"iso", z4, z4, "--json"}).out)["isomorphic"] == true);
}

TEST_CASE("search") {
    Files f;
    auto r = run({"search", "--order", "4", "--out", (f.dir / "s4").string()});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(f.dir / "s4" / "manifest.json"));
    CHECK(std::filesystem::exists(f.dir / "s4" / "g4_1.gyt"));

    r = run({"--json", "search", "--order", "5"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["class_count"] == 1);

    r = run({"search", "--order", "8", "--budget", "50"});
    CHECK(r.code == 1);
    CHECK(r.err.find("incomplete") != std::string::npos);

    CHECK(run({"search", "--order", "9", "--max-order", "9", "--jobs", "1"}).code == 0);
}

TEST_CASE("moebius") {
    auto r = run({"moebius", "--samples", "2000", "--seed", "9", "--tol", "1e-9"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["samples"] == 2000);
    CHECK(run({"moebius", "--samples", "2000", "--seed", "9", "--tol", "1e-9"}).out == r.out);

    r = run({"moebius", "--samples", "200", "--corrupt"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["pass"] == false);
    CHECK(run({"moebius", "--radius", "1.5"}).code == 2);
    CHECK(run({"moebius", "--samples", "0"}).code == 2);
}
