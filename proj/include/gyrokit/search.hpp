#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "gyrokit/table.hpp"

namespace gyrokit {

inline constexpr std::size_t kDefaultSearchBound = 8;
inline constexpr std::size_t kMaxSearchOrder = 16;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

class SearchBoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A partially filled table (row-major, -1 = open) from which the
/// backtracking search continues. Identity row and column are always set
/// and no row or column repeats a value.
struct SearchTask {
    std::size_t order = 0;
    std::vector<Element> prefix;
    std::optional<std::uint64_t> budget;
};

struct SearchOptions {
    std::size_t order = 0;
    std::size_t max_order = kDefaultSearchBound;
    std::uint64_t budget = kDefaultNodeBudget;
    unsigned jobs = 0;  // 0: hardware concurrency
};

struct SearchResult {
    std::size_t order = 0;
    bool complete = false;            // false when the node budget ran out
    std::uint64_t nodes = 0;          // backtracking nodes visited
    std::uint64_t bol_loops = 0;      // labelled left Bol loops reached at leaves
    std::uint64_t labelled = 0;       // labelled gyrogroups among them
    std::vector<CayleyTable> classes; // canonical forms, ascending
};

/// Splits the search for order n into independent tasks, one per
/// consistent completion of row 1.
std::vector<SearchTask> split_tasks(std::size_t n);

/// All gyrogroups of order n up to isomorphism.
///
/// Rows are filled with the identity fixed at 0. Branches are cut by the
/// Latin constraints and by the left Bol identity on every triple whose
/// products are known (a Bol triple with one missing product forces it).
/// Leaves are validated as gyrogroups, canonicalized and deduplicated.
/// Throws SearchBoundError when n is outside 1..max_order.
SearchResult enumerate_gyrogroups(const SearchOptions& options);

/// Manifest describing a search result: counts and per-class flags.
nlohmann::ordered_json search_manifest(const SearchResult& result);

/// Writes g{n}_{i}.gyt for each class plus manifest.json into dir.
void write_search_output(const SearchResult& result, const std::filesystem::path& dir);

}  // namespace gyrokit
