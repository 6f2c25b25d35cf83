#include "gyrokit/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <fstream>
#include <set>
#include <thread>

#include "gyrokit/morphism.hpp"
#include "gyrokit/properties.hpp"

namespace gyrokit {

namespace {

constexpr std::size_t kCells = kMaxSearchOrder * kMaxSearchOrder;

using Bits = std::uint32_t;

// Partial loop table with per-cell candidate sets.
struct Board {
    int n = 0;
    std::array<std::int8_t, kCells> val{};
    std::array<Bits, kCells> dom{};
    std::array<Bits, kMaxSearchOrder> row_used{};
    std::array<Bits, kMaxSearchOrder> col_used{};

    static int idx(int a, int b) { return a * static_cast<int>(kMaxSearchOrder) + b; }
    int at(int a, int b) const { return val[static_cast<std::size_t>(idx(a, b))]; }
};

Board empty_board(int n) {
    Board bd;
    bd.n = n;
    bd.val.fill(-1);
    const Bits all = (Bits{1} << n) - 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto i = static_cast<std::size_t>(Board::idx(a, b));
            if (a == 0 || b == 0) {
                bd.val[i] = static_cast<std::int8_t>(a == 0 ? b : a);
                bd.dom[i] = Bits{1} << bd.val[i];
            } else {
                bd.dom[i] = all & ~(Bits{1} << a) & ~(Bits{1} << b);
            }
        }
    for (int k = 0; k < n; ++k) {
        bd.row_used[static_cast<std::size_t>(k)] = Bits{1} << k;
        bd.col_used[static_cast<std::size_t>(k)] = Bits{1} << k;
    }
    bd.row_used[0] = bd.col_used[0] = all;
    return bd;
}

class Propagator {
public:
    explicit Propagator(Board& bd) : bd_(bd) {}

    bool set(int a, int b, int v) {
        const auto i = static_cast<std::size_t>(Board::idx(a, b));
        if (bd_.val[i] >= 0) return bd_.val[i] == v;
        const Bits vb = Bits{1} << v;
        if (!(bd_.dom[i] & vb)) return false;
        bd_.val[i] = static_cast<std::int8_t>(v);
        bd_.dom[i] = vb;
        bd_.row_used[static_cast<std::size_t>(a)] |= vb;
        bd_.col_used[static_cast<std::size_t>(b)] |= vb;
        changed_ = true;
        for (int k = 1; k < bd_.n; ++k) {
            if (k != b && !strike(a, k, vb)) return false;
            if (k != a && !strike(k, b, vb)) return false;
        }
        return true;
    }

    bool run() {
        do {
            changed_ = false;
            while (!pending_.empty()) {
                auto [a, b] = pending_.back();
                pending_.pop_back();
                const auto i = static_cast<std::size_t>(Board::idx(a, b));
                if (bd_.val[i] < 0 && !set(a, b, std::countr_zero(bd_.dom[i]))) return false;
            }
            if (!hidden_singles() || !bol()) return false;
        } while (changed_ || !pending_.empty());
        return true;
    }

private:
    bool strike(int a, int b, Bits vb) {
        const auto i = static_cast<std::size_t>(Board::idx(a, b));
        if (bd_.val[i] >= 0 || !(bd_.dom[i] & vb)) return true;
        bd_.dom[i] &= ~vb;
        if (bd_.dom[i] == 0) return false;
        if (std::has_single_bit(bd_.dom[i])) pending_.push_back({a, b});
        return true;
    }

    bool hidden_singles() {
        const int n = bd_.n;
        for (int line = 1; line < n; ++line)
            for (int by_row = 0; by_row < 2; ++by_row) {
                const Bits used = by_row ? bd_.row_used[static_cast<std::size_t>(line)]
                                         : bd_.col_used[static_cast<std::size_t>(line)];
                Bits open = ((Bits{1} << n) - 1) & ~used;
                while (open) {
                    const int v = std::countr_zero(open);
                    open &= open - 1;
                    const Bits vb = Bits{1} << v;
                    int where = -1, count = 0;
                    for (int k = 1; k < n && count < 2; ++k) {
                        const int a = by_row ? line : k, b = by_row ? k : line;
                        if (bd_.at(a, b) < 0 && (bd_.dom[static_cast<std::size_t>(Board::idx(a, b))] & vb)) {
                            where = k;
                            ++count;
                        }
                    }
                    if (count == 0) return false;
                    if (count == 1 && !set(by_row ? line : where, by_row ? where : line, v)) return false;
                }
            }
        return true;
    }

    // a(b(ac)) = (a(ba))c on every triple whose chain is known up to the last product
    bool bol() {
        const int n = bd_.n;
        for (int a = 1; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ba = bd_.at(b, a);
                if (ba < 0) continue;
                const int aba = bd_.at(a, ba);
                if (aba < 0) continue;
                for (int c = 1; c < n; ++c) {
                    const int ac = bd_.at(a, c);
                    if (ac < 0) continue;
                    const int bac = bd_.at(b, ac);
                    if (bac < 0) continue;
                    const int lhs = bd_.at(a, bac);
                    const int rhs = bd_.at(aba, c);
                    if (lhs >= 0 && rhs >= 0) {
                        if (lhs != rhs) return false;
                    } else if (lhs >= 0) {
                        if (!set(aba, c, lhs)) return false;
                    } else if (rhs >= 0) {
                        if (!set(a, bac, rhs)) return false;
                    }
                }
            }
        return true;
    }

    Board& bd_;
    std::vector<std::pair<int, int>> pending_;
    bool changed_ = false;
};

bool assign_and_propagate(Board& bd, int a, int b, int v) {
    Propagator p(bd);
    return p.set(a, b, v) && p.run();
}

bool propagate(Board& bd) {
    Propagator p(bd);
    return p.run();
}

// Open cell with the fewest candidates; restricted to `row` when row >= 0.
int pick_cell(const Board& bd, int row) {
    int best = -1, best_count = 1 << 30;
    const int lo = row >= 0 ? row : 1, hi = row >= 0 ? row + 1 : bd.n;
    for (int a = lo; a < hi; ++a)
        for (int b = 1; b < bd.n; ++b) {
            const auto i = static_cast<std::size_t>(Board::idx(a, b));
            if (bd.val[i] >= 0) continue;
            const int c = std::popcount(bd.dom[i]);
            if (c < best_count) {
                best_count = c;
                best = Board::idx(a, b);
            }
        }
    return best;
}

bool row_complete(const Board& bd, int row) {
    for (int b = 0; b < bd.n; ++b)
        if (bd.at(row, b) < 0) return false;
    return true;
}

CayleyTable to_table(const Board& bd) {
    const auto n = static_cast<std::size_t>(bd.n);
    std::vector<Element> e(n * n);
    for (int a = 0; a < bd.n; ++a)
        for (int b = 0; b < bd.n; ++b) e[static_cast<std::size_t>(a) * n + b] = bd.at(a, b);
    return CayleyTable(n, std::move(e));
}

std::vector<Element> to_prefix(const Board& bd) {
    std::vector<Element> out;
    for (int a = 0; a < bd.n; ++a)
        for (int b = 0; b < bd.n; ++b) out.push_back(bd.at(a, b));
    return out;
}

struct Shared {
    std::uint64_t budget;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
};

struct TaskOutput {
    std::uint64_t nodes = 0;
    std::uint64_t bol_loops = 0;
    std::vector<Gyrogroup> found;
};

class Solver {
public:
    Solver(Shared& shared, TaskOutput& out) : shared_(shared), out_(out) {}

    void solve(const Board& bd) {
        if (!tick()) return;
        const int cell = pick_cell(bd, -1);
        if (cell < 0) {
            leaf(bd);
            return;
        }
        const int a = cell / static_cast<int>(kMaxSearchOrder), b = cell % static_cast<int>(kMaxSearchOrder);
        Bits d = bd.dom[static_cast<std::size_t>(cell)];
        while (d && !shared_.exhausted.load(std::memory_order_relaxed)) {
            const int v = std::countr_zero(d);
            d &= d - 1;
            Board child = bd;
            if (assign_and_propagate(child, a, b, v)) solve(child);
        }
    }

private:
    bool tick() {
        ++out_.nodes;
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
            shared_.exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        return !shared_.exhausted.load(std::memory_order_relaxed);
    }

    void leaf(const Board& bd) {
        ++out_.bol_loops;
        auto v = validate_gyrogroup(to_table(bd));
        if (v) out_.found.push_back(std::move(*v.gyrogroup));
    }

    Shared& shared_;
    TaskOutput& out_;
};

Board board_from_task(const SearchTask& task) {
    Board bd = empty_board(static_cast<int>(task.order));
    const int n = bd.n;
    Propagator p(bd);
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            const Element v = task.prefix[static_cast<std::size_t>(a * n + b)];
            if (v >= 0 && !p.set(a, b, v)) throw std::invalid_argument("search task prefix is inconsistent");
        }
    if (!p.run()) throw std::invalid_argument("search task prefix is inconsistent");
    return bd;
}

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<SearchTask> split_tasks(std::size_t n) {
    if (n < 1 || n > kMaxSearchOrder) throw SearchBoundError("order out of range for search");
    std::vector<SearchTask> tasks;
    Board root = empty_board(static_cast<int>(n));
    if (!propagate(root)) return tasks;
    if (n < 3) {
        tasks.push_back({n, to_prefix(root), std::nullopt});
        return tasks;
    }
    // depth-first over row 1 only
    std::vector<Board> stack{root};
    while (!stack.empty()) {
        Board bd = stack.back();
        stack.pop_back();
        if (row_complete(bd, 1)) {
            tasks.push_back({n, to_prefix(bd), std::nullopt});
            continue;
        }
        const int cell = pick_cell(bd, 1);
        const int b = cell % static_cast<int>(kMaxSearchOrder);
        Bits d = bd.dom[static_cast<std::size_t>(cell)];
        std::vector<Board> children;
        while (d) {
            const int v = std::countr_zero(d);
            d &= d - 1;
            Board child = bd;
            if (assign_and_propagate(child, 1, b, v)) children.push_back(child);
        }
        // push in reverse so tasks come out in ascending value order
        stack.insert(stack.end(), children.rbegin(), children.rend());
    }
    return tasks;
}

SearchResult enumerate_gyrogroups(const SearchOptions& options) {
    const std::size_t n = options.order;
    const std::size_t bound = std::min(options.max_order, kMaxSearchOrder);
    if (n < 1 || n > bound)
        throw SearchBoundError("order " + std::to_string(n) + " outside search bound 1.." + std::to_string(bound));

    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());

    const auto tasks = split_tasks(n);
    Shared shared;
    shared.budget = options.budget;
    std::vector<TaskOutput> outputs(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        if (shared.exhausted.load()) return;
        Solver(shared, outputs[i]).solve(board_from_task(tasks[i]));
    });

    SearchResult r;
    r.order = n;
    r.complete = !shared.exhausted.load();
    std::vector<const Gyrogroup*> found;
    for (const auto& o : outputs) {
        r.nodes += o.nodes;
        r.bol_loops += o.bol_loops;
        for (const auto& g : o.found) found.push_back(&g);
    }
    r.labelled = found.size();

    std::vector<CayleyTable> canon(found.size());
    parallel_for(found.size(), jobs, [&](std::size_t i) { canon[i] = canonical_form(*found[i]); });
    std::set<CayleyTable> distinct(canon.begin(), canon.end());
    r.classes.assign(distinct.begin(), distinct.end());
    return r;
}

nlohmann::ordered_json search_manifest(const SearchResult& result) {
    nlohmann::ordered_json j;
    j["order"] = result.order;
    j["complete"] = result.complete;
    j["class_count"] = result.classes.size();
    j["count_source"] = "computed by exhaustive search in this tool; not taken from a published census";
    j["nodes"] = result.nodes;
    j["labelled_bol_loops"] = result.bol_loops;
    j["labelled_gyrogroups"] = result.labelled;
    std::size_t groups = 0;
    auto classes = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        auto g = std::move(*validate_gyrogroup(result.classes[i]).gyrogroup);
        nlohmann::ordered_json c;
        c["index"] = i;
        c["file"] = "g" + std::to_string(result.order) + "_" + std::to_string(i) + ".gyt";
        c["is_group"] = g.is_group();
        c["is_gyrocommutative"] = is_gyrocommutative(g);
        c["lagrange"] = check_lagrange(g, result.order).holds;
        c["wcp"] = has_wcp(g);
        c["scp"] = has_scp(g, result.order);
        c["order_profile"] = order_profile(g);
        groups += g.is_group();
        classes.push_back(std::move(c));
    }
    j["group_count"] = groups;
    j["proper_gyrogroup_count"] = result.classes.size() - groups;
    j["classes"] = std::move(classes);
    return j;
}

void write_search_output(const SearchResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        std::ofstream f(dir / ("g" + std::to_string(result.order) + "_" + std::to_string(i) + ".gyt"),
                        std::ios::binary);
        f << serialize_table(result.classes[i]);
        if (!f) throw std::runtime_error("cannot write search output to " + dir.string());
    }
    std::ofstream m(dir / "manifest.json", std::ios::binary);
    m << search_manifest(result).dump(2) << '\n';
    if (!m) throw std::runtime_error("cannot write manifest to " + dir.string());
}

}  // namespace gyrokit
