#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gyrokit/morphism.hpp"
#include "gyrokit/search.hpp"

namespace testkit {

Gyrogroup make(const CayleyTable& t) {
    auto v = gyrokit::validate_gyrogroup(t);
    if (!v) throw std::logic_error("test table is not a gyrogroup:\n" + gyrokit::serialize_table(t));
    return std::move(*v.gyrogroup);
}

const std::vector<Gyrogroup>& corpus(std::size_t n) {
    static std::map<std::size_t, std::vector<Gyrogroup>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    gyrokit::SearchOptions opts;
    opts.order = n;
    auto r = gyrokit::enumerate_gyrogroups(opts);
    if (!r.complete) throw std::logic_error("corpus search incomplete");
    std::vector<Gyrogroup> out;
    for (const auto& t : r.classes) out.push_back(make(t));
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<const Gyrogroup*> corpus_upto(std::size_t n) {
    std::vector<const Gyrogroup*> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (const auto& g : corpus(k)) out.push_back(&g);
    return out;
}

CayleyTable g8_table() {
    return gyrokit::parse_table(
        "8\n"
        "0 1 2 3 4 5 6 7\n"
        "1 0 3 2 5 4 7 6\n"
        "2 3 0 1 6 7 4 5\n"
        "3 2 1 0 7 6 5 4\n"
        "4 5 6 7 0 1 2 3\n"
        "5 4 7 6 1 0 3 2\n"
        "6 7 4 5 3 2 1 0\n"
        "7 6 5 4 2 3 0 1\n");
}

namespace {

void fill_loops(std::size_t n, std::vector<Element>& cells, std::size_t pos, std::vector<CayleyTable>& out) {
    if (pos == n * n) {
        out.emplace_back(n, cells);
        return;
    }
    const std::size_t r = pos / n, c = pos % n;
    if (r == 0 || c == 0) {
        cells[pos] = static_cast<Element>(r == 0 ? c : r);
        fill_loops(n, cells, pos + 1, out);
        return;
    }
    for (Element v = 0; v < static_cast<Element>(n); ++v) {
        bool ok = true;
        for (std::size_t k = 0; k < c && ok; ++k) ok = cells[r * n + k] != v;
        for (std::size_t k = 0; k < r && ok; ++k) ok = cells[k * n + c] != v;
        if (!ok) continue;
        cells[pos] = v;
        fill_loops(n, cells, pos + 1, out);
    }
}

}  // namespace

std::vector<CayleyTable> all_loops(std::size_t n) {
    std::vector<CayleyTable> out;
    std::vector<Element> cells(n * n, 0);
    fill_loops(n, cells, 0, out);
    return out;
}

bool naive_is_gyrogroup(const CayleyTable& t) {
    const int n = static_cast<int>(t.order());
    auto add = [&](int a, int b) { return t(a, b); };
    std::vector<int> linv(n, -1);
    for (int a = 0; a < n; ++a) {
        if (add(0, a) != a) return false;
        for (int b = 0; b < n; ++b)
            if (add(b, a) == 0) linv[a] = b;
        if (linv[a] < 0) return false;
    }
    auto gyr = [&](int a, int b, int c) { return add(linv[add(a, b)], add(a, add(b, c))); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<bool> seen(n, false);
            for (int c = 0; c < n; ++c) {
                const int g = gyr(a, b, c);
                if (seen[g]) return false;
                seen[g] = true;
                if (add(a, add(b, c)) != add(add(a, b), g)) return false;
                if (g != gyr(add(a, b), b, c)) return false;
                for (int d = 0; d < n; ++d)
                    if (gyr(a, b, add(c, d)) != add(g, gyr(a, b, d))) return false;
            }
        }
    return true;
}

bool naive_is_left_bol(const CayleyTable& t) {
    const int n = static_cast<int>(t.order());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t(a, t(b, t(a, c))) != t(t(a, t(b, a)), c)) return false;
    return true;
}

bool naive_isomorphic(const CayleyTable& x, const CayleyTable& y) {
    const std::size_t n = x.order();
    if (n != y.order()) return false;
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                ok = p[x(a, b)] == y(p[a], p[b]);
        if (ok) return true;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return false;
}

std::vector<CayleyTable> naive_classes(std::size_t n) {
    std::vector<CayleyTable> reps;
    for (const auto& t : all_loops(n)) {
        if (!naive_is_gyrogroup(t)) continue;
        const bool known = std::any_of(reps.begin(), reps.end(), [&](const CayleyTable& r) { return naive_isomorphic(r, t); });
        if (!known) reps.push_back(t);
    }
    return reps;
}

std::size_t naive_order(const CayleyTable& t, Element a) {
    Element x = a;
    std::size_t k = 1;
    while (x != 0) {
        x = t(a, x);
        if (++k > t.order()) throw std::logic_error("naive_order: no return to identity");
    }
    return k;
}

std::string first_isomorphism_failure(const Gyrogroup& g, const Gyrogroup& h, const std::vector<Element>& map) {
    auto phi = gyrokit::check_homomorphism(g, h, map);
    if (!phi.is_homomorphism) return "not a homomorphism";
    const auto& ker = *phi.kernel;
    if (!gyrokit::is_subgyrogroup(g, ker.members)) return "kernel is not a subgyrogroup";
    for (Element a = 0; a < static_cast<Element>(g.order()); ++a)
        for (Element b = 0; b < static_cast<Element>(g.order()); ++b)
            for (Element k : ker.members)
                if (!ker.contains(g.gyr_apply(a, b, k))) return "kernel is not gyration invariant";
    auto normal = gyrokit::is_normal(g, ker);
    if (!normal) return "kernel judged not normal: " + normal.reason;
    auto img = gyrokit::image(phi);
    if (!gyrokit::is_subgyrogroup(h, img.members)) return "image is not a subgyrogroup";
    const auto image_group = gyrokit::induced(h, img);
    if (!gyrokit::find_isomorphism(normal.witness->quotient, image_group)) return "G/ker(phi) not isomorphic to phi(G)";
    return {};
}

std::string second_isomorphism_failure(const Gyrogroup& g, const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> sum;
    for (Element x : a)
        for (Element y : b) sum.push_back(g.op(x, y));
    sum = gyrokit::normalize_members(g, sum);
    if (!gyrokit::is_subgyrogroup(g, sum)) return "A+B is not a subgyrogroup";

    gyrokit::SubSet as, bs, sums;
    as.members = a;
    bs.members = b;
    sums.members = sum;
    const auto ga = gyrokit::induced(g, as);
    const auto gsum = gyrokit::induced(g, sums);

    gyrokit::SubSet meet;
    meet.members = gyrokit::localize(as, gyrokit::intersect(as, bs).members);
    auto meet_normal = gyrokit::is_normal(ga, meet);
    if (!meet_normal) return "A∩B is not normal in A: " + meet_normal.reason;

    gyrokit::SubSet b_in_sum;
    b_in_sum.members = gyrokit::localize(sums, b);
    auto b_normal = gyrokit::is_normal(gsum, b_in_sum);
    if (!b_normal) return "B is not normal in A+B: " + b_normal.reason;

    if (!gyrokit::find_isomorphism(b_normal.witness->quotient, meet_normal.witness->quotient))
        return "(A+B)/B not isomorphic to A/(A∩B)";
    return {};
}

std::filesystem::path temp_dir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    auto p = std::filesystem::temp_directory_path() / ("gyrokit_" + tag + "_" + std::to_string(rng()));
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testkit
