#include "gyrokit/subgyro.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace gyrokit {

namespace {

using Mask = std::uint64_t;

Mask bit(Element a) { return Mask{1} << a; }

std::vector<Element> members_of(Mask m) {
    std::vector<Element> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask mask_of(std::span<const Element> s) {
    Mask m = 0;
    for (Element a : s) m |= bit(a);
    return m;
}

Mask close(const Gyrogroup& g, Mask seed) {
    Mask have = bit(0);
    std::vector<Element> members{0};
    std::vector<Element> work = members_of(seed & ~have);
    for (Element a : work) have |= bit(a);
    while (!work.empty()) {
        const Element x = work.back();
        work.pop_back();
        members.push_back(x);
        auto add = [&](Element y) {
            if (!(have & bit(y))) {
                have |= bit(y);
                work.push_back(y);
            }
        };
        add(g.inv(x));
        for (Element y : members) {
            add(g.op(x, y));
            add(g.op(y, x));
        }
    }
    return have;
}

void require_masks(const Gyrogroup& g) {
    if (g.order() > kMaxEnumerationBound)
        throw EnumerationBoundError("subset machinery supports orders up to " + std::to_string(kMaxEnumerationBound));
}

bool subgyro_flag(const Gyrogroup& g, const SubSet& s) {
    if (s.is_subgyrogroup == Tri::Unknown) return !s.members.empty() && is_subgyrogroup(g, s.members);
    return s.is_subgyrogroup == Tri::Yes;
}

}  // namespace

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Unknown: return "unknown";
        case Tri::Yes: return "true";
        case Tri::No: return "false";
    }
    return "unknown";
}

bool SubSet::contains(Element a) const { return std::binary_search(members.begin(), members.end(), a); }

std::vector<Element> normalize_members(const Gyrogroup& g, std::span<const Element> s) {
    std::vector<Element> out(s.begin(), s.end());
    for (Element a : out)
        if (!g.contains(a)) throw std::out_of_range("element " + std::to_string(a) + " out of range");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_subgyrogroup(const Gyrogroup& g, std::span<const Element> s) {
    if (s.empty()) throw std::invalid_argument("is_subgyrogroup: empty set");
    const auto m = normalize_members(g, s);
    std::vector<char> in(g.order(), 0);
    for (Element a : m) in[a] = 1;
    for (Element a : m) {
        if (!in[g.inv(a)]) return false;
        for (Element b : m)
            if (!in[g.op(a, b)]) return false;
    }
    return true;
}

SubSet generate(const Gyrogroup& g, std::span<const Element> a) {
    if (a.empty()) throw std::invalid_argument("generate: empty generating set");
    require_masks(g);
    SubSet out;
    out.members = members_of(close(g, mask_of(normalize_members(g, a))));
    out.is_subgyrogroup = Tri::Yes;
    return out;
}

SubSet cyclic(const Gyrogroup& g, Element a) {
    const std::size_t k = order_of(g, a);
    SubSet out;
    for (std::size_t m = 0; m < k; ++m) out.members.push_back(scalar(g, static_cast<long long>(m), a));
    std::sort(out.members.begin(), out.members.end());
    out.is_subgyrogroup = Tri::Yes;
    out.is_subgroup = Tri::Yes;
    return out;
}

std::vector<SubSet> all_subgyrogroups(const Gyrogroup& g, std::size_t bound) {
    bound = std::min(bound, kMaxEnumerationBound);
    if (g.order() > bound)
        throw EnumerationBoundError("order " + std::to_string(g.order()) + " exceeds enumeration bound " +
                                    std::to_string(bound));
    const auto n = static_cast<Element>(g.order());

    std::unordered_set<Mask> seen;
    std::vector<Mask> frontier;
    auto offer = [&](Mask m) {
        if (seen.insert(m).second) frontier.push_back(m);
    };
    offer(bit(0));
    for (Element a = 1; a < n; ++a) offer(close(g, bit(a)));

    std::vector<Mask> current;
    while (!frontier.empty()) {
        current.swap(frontier);
        frontier.clear();
        for (Mask h : current)
            for (Element x = 1; x < n; ++x)
                if (!(h & bit(x))) offer(close(g, h | bit(x)));
    }

    std::vector<SubSet> out;
    out.reserve(seen.size());
    for (Mask m : seen) {
        SubSet s;
        s.members = members_of(m);
        s.is_subgyrogroup = Tri::Yes;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const SubSet& x, const SubSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.members < y.members;
    });
    for (auto& s : out) s.is_subgroup = to_tri(is_subgroup_subset(g, s));
    return out;
}

bool is_subgroup_subset(const Gyrogroup& g, const SubSet& s) {
    if (!subgyro_flag(g, s)) throw std::invalid_argument("is_subgroup_subset: not a subgyrogroup");
    for (Element a : s.members)
        for (Element b : s.members) {
            auto gyr = g.gyr_view(a, b);
            for (Element c : s.members)
                if (gyr[c] != c) return false;
        }
    return true;
}

CosetDecomposition left_cosets(const Gyrogroup& g, const SubSet& h) {
    if (!subgyro_flag(g, h)) throw std::invalid_argument("left_cosets: not a subgyrogroup");
    require_masks(g);
    const auto n = static_cast<Element>(g.order());

    CosetDecomposition out;
    out.subgroup_set = h;
    out.subgroup_set.is_subgyrogroup = Tri::Yes;

    std::vector<Mask> seen;
    Mask covered = 0;
    bool disjoint = true;
    for (Element a = 0; a < n; ++a) {
        Mask c = 0;
        for (Element x : h.members) c |= bit(g.op(a, x));
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        if (covered & c) disjoint = false;
        covered |= c;
        seen.push_back(c);
        out.cosets.push_back(members_of(c));
    }
    out.is_partition = disjoint;
    if (disjoint) out.index = out.cosets.size();
    return out;
}

Gyrogroup induced(const Gyrogroup& g, const SubSet& h) {
    if (!subgyro_flag(g, h)) throw std::invalid_argument("induced: not a subgyrogroup");
    const std::size_t k = h.members.size();
    std::vector<Element> local(g.order(), -1);
    for (std::size_t i = 0; i < k; ++i) local[h.members[i]] = static_cast<Element>(i);
    std::vector<Element> entries(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = local[g.op(h.members[i], h.members[j])];
    auto v = validate_gyrogroup(CayleyTable(k, std::move(entries)));
    if (!v) throw std::logic_error("induced subgyrogroup failed gyrogroup validation");
    return std::move(*v.gyrogroup);
}

std::vector<Element> localize(const SubSet& h, std::span<const Element> elements) {
    std::vector<Element> out;
    out.reserve(elements.size());
    for (Element a : elements) {
        auto it = std::lower_bound(h.members.begin(), h.members.end(), a);
        if (it == h.members.end() || *it != a) throw std::invalid_argument("localize: element outside subset");
        out.push_back(static_cast<Element>(it - h.members.begin()));
    }
    return out;
}

SubSet intersect(const SubSet& x, const SubSet& y) {
    SubSet out;
    std::set_intersection(x.members.begin(), x.members.end(), y.members.begin(), y.members.end(),
                          std::back_inserter(out.members));
    return out;
}

}  // namespace gyrokit
