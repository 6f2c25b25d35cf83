#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "gyrokit/groups.hpp"
#include "gyrokit/morphism.hpp"
#include "gyrokit/properties.hpp"
#include "gyrokit/search.hpp"
#include "support.hpp"

using namespace gyrokit;

namespace {

SearchResult run_search(std::size_t n, unsigned jobs = 1) {
    SearchOptions o;
    o.order = n;
    o.jobs = jobs;
    return enumerate_gyrogroups(o);
}

}  // namespace

TEST_CASE("class counts by order") {
    // orders 1..5 are cross-checked below against the naive oracle
    const std::vector<std::size_t> expected{1, 1, 1, 2, 1, 2, 1, 11};
    for (std::size_t n = 1; n <= 8; ++n) {
        INFO("order " << n);
        auto r = run_search(n);
        CHECK(r.complete);
        CHECK(r.classes.size() == expected[n - 1]);
        CHECK(std::is_sorted(r.classes.begin(), r.classes.end()));
    }
}

TEST_CASE("search agrees with the naive all-loops oracle") {
    for (std::size_t n = 1; n <= 5; ++n) {
        INFO("order " << n);
        const auto naive = testkit::naive_classes(n);
        const auto pruned = run_search(n).classes;
        REQUIRE(naive.size() == pruned.size());
        for (const auto& t : naive) {
            const auto matches = std::count_if(pruned.begin(), pruned.end(),
                                               [&](const CayleyTable& p) { return testkit::naive_isomorphic(p, t); });
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("order 4 gives exactly Z4 and K4") {
    const auto& c = testkit::corpus(4);
    REQUIRE(c.size() == 2);
    const auto z4 = from_group(cyclic_group_table(4));
    const auto k4 = from_group(klein_four_table());
    int z = 0, k = 0;
    for (const auto& g : c) {
        CHECK(g.is_group());
        z += find_isomorphism(g, z4).has_value();
        k += find_isomorphism(g, k4).has_value();
    }
    CHECK(z == 1);
    CHECK(k == 1);
}

TEST_CASE("order 8 contains the five groups and proper gyrogroups") {
    const auto& c = testkit::corpus(8);
    std::vector<CayleyTable> groups{cyclic_group_table(8), direct_product(cyclic_group_table(4), cyclic_group_table(2)),
                                    direct_product(klein_four_table(), cyclic_group_table(2)), dihedral_group_table(4),
                                    quaternion_table()};
    for (const auto& t : groups) {
        const auto g = from_group(t);
        const auto hits = std::count_if(c.begin(), c.end(), [&](const Gyrogroup& x) { return find_isomorphism(x, g).has_value(); });
        CHECK(hits == 1);
    }
    const auto proper = std::count_if(c.begin(), c.end(), [](const Gyrogroup& g) { return !g.is_group(); });
    CHECK(proper == 6);
}

TEST_CASE("every emitted table is a gyrogroup satisfying the structure laws") {
    for (auto* g : testkit::corpus_upto(8)) {
        CHECK(testkit::naive_is_gyrogroup(g->table()));
        CHECK(check_structure(*g).all_hold());
    }
}

TEST_CASE("labelled counts are consistent") {
    // labelled groups of order 7 with identity 0: 6!/|Aut(Z7)| = 120
    auto r7 = run_search(7);
    CHECK(r7.labelled == 120);
    auto r4 = run_search(4);
    CHECK(r4.labelled == 4);
    CHECK(r4.bol_loops >= r4.labelled);
}

TEST_CASE("task split covers row 1 completions") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto tasks = split_tasks(n);
        CHECK_FALSE(tasks.empty());
        for (const auto& t : tasks) {
            REQUIRE(t.prefix.size() == n * n);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(t.prefix[j] == static_cast<Element>(j));
                CHECK(t.prefix[j * n] == static_cast<Element>(j));
                if (n > 1) CHECK(t.prefix[n + j] >= 0);
            }
        }
    }
}

TEST_CASE("results do not depend on the number of jobs") {
    for (std::size_t n : {6, 8}) {
        auto a = run_search(n, 1), b = run_search(n, 4);
        CHECK(a.classes == b.classes);
        CHECK(a.nodes == b.nodes);
        CHECK(search_manifest(a).dump() == search_manifest(b).dump());
    }
}

TEST_CASE("bounds and budgets") {
    SearchOptions o;
    o.order = 9;
    CHECK_THROWS_AS(enumerate_gyrogroups(o), SearchBoundError);
    o.order = 0;
    CHECK_THROWS_AS(enumerate_gyrogroups(o), SearchBoundError);
    o.order = 17;
    o.max_order = 20;
    CHECK_THROWS_AS(enumerate_gyrogroups(o), SearchBoundError);

    o.order = 8;
    o.max_order = 8;
    o.budget = 100;
    auto r = enumerate_gyrogroups(o);
    CHECK_FALSE(r.complete);
    CHECK(search_manifest(r)["complete"] == false);

    o.order = 9;
    o.max_order = 9;
    o.budget = kDefaultNodeBudget;
    auto r9 = enumerate_gyrogroups(o);
    CHECK(r9.complete);
    for (const auto& t : r9.classes) CHECK(testkit::make(t).is_group());  // order p^2
}

TEST_CASE("from_group") {
    const auto s3 = from_group(symmetric3_table());
    CHECK(s3.is_group());
    CHECK_FALSE(is_gyrocommutative(s3));
    CHECK(from_group(cyclic_group_table(7)).is_group());
    CHECK_THROWS_AS(from_group(testkit::g8_table()), std::invalid_argument);
    CHECK_THROWS_AS(from_group(CayleyTable(2, {0, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("output files and manifest") {
    const auto dir = testkit::temp_dir("search");
    auto r = run_search(8);
    write_search_output(r, dir);
    auto manifest = nlohmann::json::parse(testkit::read_file(dir / "manifest.json"));
    CHECK(manifest["order"] == 8);
    CHECK(manifest["class_count"] == 11);
    CHECK(manifest["complete"] == true);
    CHECK(manifest["group_count"] == 5);
    CHECK(manifest["count_source"].get<std::string>().find("computed") != std::string::npos);
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const auto file = "g8_" + std::to_string(i) + ".gyt";
        CHECK(manifest["classes"][i]["file"] == file);
        const auto t = parse_table(testkit::read_file(dir / file));
        CHECK(t == r.classes[i]);
        CHECK(serialize_table(t) == testkit::read_file(dir / file));
    }
    std::filesystem::remove_all(dir);
}
