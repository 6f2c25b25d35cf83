#include "gyrokit/morphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gyrokit {

Morphism check_homomorphism(const Gyrogroup& src, const Gyrogroup& dst, std::span<const Element> map) {
    if (map.size() != src.order()) throw std::invalid_argument("morphism map is not total on the source");
    for (Element y : map)
        if (!dst.contains(y)) throw std::invalid_argument("morphism image " + std::to_string(y) + " out of range");

    Morphism out;
    out.source_order = src.order();
    out.target_order = dst.order();
    out.map.assign(map.begin(), map.end());
    const auto n = static_cast<Element>(src.order());
    out.is_homomorphism = true;
    for (Element a = 0; a < n && out.is_homomorphism; ++a)
        for (Element b = 0; b < n; ++b)
            if (map[src.op(a, b)] != dst.op(map[a], map[b])) {
                out.is_homomorphism = false;
                break;
            }
    if (out.is_homomorphism) {
        SubSet k;
        for (Element a = 0; a < n; ++a)
            if (map[a] == 0) k.members.push_back(a);
        k.is_subgyrogroup = Tri::Yes;
        k.is_normal = Tri::Yes;
        out.kernel = std::move(k);
    }
    return out;
}

SubSet image(const Morphism& phi) {
    SubSet out;
    out.members = phi.map;
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    if (phi.is_homomorphism) out.is_subgyrogroup = Tri::Yes;
    return out;
}

NormalityResult is_normal(const Gyrogroup& g, const SubSet& n) {
    if (n.members.empty() || !is_subgyrogroup(g, n.members))
        throw std::invalid_argument("is_normal: not a subgyrogroup");

    NormalityResult out;
    auto cosets = left_cosets(g, n);
    if (!cosets.is_partition) {
        out.reason = "left cosets do not partition G";
        return out;
    }

    const std::size_t order = g.order();
    std::vector<Element> cid(order, -1);
    for (std::size_t i = 0; i < cosets.cosets.size(); ++i)
        for (Element a : cosets.cosets[i]) cid[a] = static_cast<Element>(i);

    // the representative-free coset product must agree with the one from a, b
    const auto ne = static_cast<Element>(order);
    for (Element a = 0; a < ne; ++a)
        for (Element b = 0; b < ne; ++b) {
            const Element expected = cid[g.op(a, b)];
            for (Element h : n.members)
                for (Element k : n.members)
                    if (cid[g.op(g.op(a, h), g.op(b, k))] != expected) {
                        out.reason = "coset operation depends on representatives";
                        return out;
                    }
        }

    // cosets are already ordered by smallest representative; the coset of 0 is N itself
    const std::size_t m = cosets.cosets.size();
    std::vector<Element> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            entries[i * m + j] = cid[g.op(cosets.cosets[i].front(), cosets.cosets[j].front())];
    CayleyTable qt(m, std::move(entries));
    if (!validate_loop(qt).valid) {
        out.reason = "coset table is not a loop";
        return out;
    }
    auto qv = validate_gyrogroup(qt);
    if (!qv) {
        out.reason = "coset table is not a gyrogroup";
        return out;
    }

    Morphism proj = check_homomorphism(g, *qv.gyrogroup, cid);
    if (!proj.is_homomorphism || proj.kernel->members != n.members)
        throw std::logic_error("canonical projection is not a homomorphism with kernel N");

    SubSet normal = n;
    normal.is_subgyrogroup = Tri::Yes;
    normal.is_normal = Tri::Yes;
    out.normal = true;
    out.witness = QuotientGyrogroup{normal, std::move(cosets.cosets), std::move(*qv.gyrogroup), std::move(proj)};
    return out;
}

QuotientGyrogroup quotient(const Gyrogroup& g, const SubSet& n) {
    auto r = is_normal(g, n);
    if (!r) throw std::invalid_argument("quotient: subgyrogroup is not normal (" + r.reason + ")");
    return std::move(*r.witness);
}

std::vector<std::size_t> order_profile(const Gyrogroup& g) {
    auto orders = element_orders(g);
    std::sort(orders.begin(), orders.end());
    return orders;
}

namespace {

// Backtracking over partial maps phi: src -> dst that are closed under the
// operation. `injective` selects isomorphism search (orders must match and
// images are distinct); otherwise |phi(a)| must divide |a|.
class MapSearch {
public:
    MapSearch(const Gyrogroup& src, const Gyrogroup& dst, bool injective)
        : src_(src), dst_(dst), injective_(injective), src_orders_(element_orders(src)),
          dst_orders_(element_orders(dst)) {}

    // Calls visit(phi) for each complete map; stops when visit returns false.
    void run(const std::function<bool(const std::vector<Element>&)>& visit) {
        State s;
        s.phi.assign(src_.order(), -1);
        s.used.assign(dst_.order(), 0);
        if (!assign(s, 0, 0)) return;
        stop_ = false;
        descend(s, visit);
    }

private:
    struct State {
        std::vector<Element> phi;
        std::vector<char> used;
        std::vector<Element> assigned;
    };

    bool compatible(const State& s, Element x, Element y) const {
        if (injective_) return !s.used[y] && src_orders_[x] == dst_orders_[y];
        return src_orders_[x] % dst_orders_[y] == 0;
    }

    bool assign(State& s, Element x, Element y) {
        if (!compatible(s, x, y)) return false;
        s.phi[x] = y;
        s.used[y] = 1;
        s.assigned.push_back(x);
        // closure: products of assigned elements are forced
        for (std::size_t i = 0; i < s.assigned.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const Element u = s.assigned[i], v = s.assigned[j];
                for (int flip = 0; flip < 2; ++flip) {
                    const Element a = flip ? v : u, b = flip ? u : v;
                    const Element w = src_.op(a, b);
                    const Element t = dst_.op(s.phi[a], s.phi[b]);
                    if (s.phi[w] < 0) {
                        if (!compatible(s, w, t)) return false;
                        s.phi[w] = t;
                        s.used[t] = 1;
                        s.assigned.push_back(w);
                    } else if (s.phi[w] != t) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void descend(const State& s, const std::function<bool(const std::vector<Element>&)>& visit) {
        if (stop_) return;
        auto it = std::find(s.phi.begin(), s.phi.end(), -1);
        if (it == s.phi.end()) {
            if (!visit(s.phi)) stop_ = true;
            return;
        }
        const auto x = static_cast<Element>(it - s.phi.begin());
        const auto m = static_cast<Element>(dst_.order());
        for (Element y = 0; y < m && !stop_; ++y) {
            if (!compatible(s, x, y)) continue;
            State child = s;
            if (assign(child, x, y)) descend(child, visit);
        }
    }

    const Gyrogroup& src_;
    const Gyrogroup& dst_;
    bool injective_;
    std::vector<std::size_t> src_orders_;
    std::vector<std::size_t> dst_orders_;
    bool stop_ = false;
};

}  // namespace

std::optional<Morphism> find_isomorphism(const Gyrogroup& g, const Gyrogroup& h) {
    if (g.order() != h.order() || order_profile(g) != order_profile(h)) return std::nullopt;
    std::optional<Morphism> found;
    MapSearch(g, h, true).run([&](const std::vector<Element>& phi) {
        found = check_homomorphism(g, h, phi);
        return false;
    });
    if (found && !found->is_homomorphism) throw std::logic_error("isomorphism search produced a non-homomorphism");
    return found;
}

std::vector<std::vector<Element>> all_homomorphisms(const Gyrogroup& g, const Gyrogroup& h) {
    std::vector<std::vector<Element>> out;
    MapSearch(g, h, false).run([&](const std::vector<Element>& phi) {
        out.push_back(phi);
        return true;
    });
    return out;
}

CayleyTable canonical_form(const Gyrogroup& g) {
    const std::size_t n = g.order();
    const auto orders = element_orders(g);

    // new label k must be filled by an old element whose order is slot_order[k]
    std::vector<Element> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin() + 1, by_order.end(),
                     [&](Element x, Element y) { return orders[x] < orders[y]; });

    // blocks of equal order; each block is permuted independently
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 1; i < n;) {
        std::size_t j = i;
        while (j < n && orders[by_order[j]] == orders[by_order[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    const CayleyTable& t = g.table();
    std::vector<Element> p = by_order;  // p[new] = old
    std::vector<Element> sigma(n);      // sigma[old] = new
    std::vector<Element> best(n * n);
    std::vector<Element> best_sigma;
    bool have_best = false;

    auto evaluate = [&] {
        for (std::size_t k = 0; k < n; ++k) sigma[p[k]] = static_cast<Element>(k);
        bool improving = !have_best;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) {
                const Element v = sigma[t(p[i], p[j])];
                if (!improving) {
                    const Element cur = best[i * n + j];
                    if (v > cur) return;
                    if (v < cur) improving = true;
                }
                best[i * n + j] = v;
            }
        if (improving) {
            have_best = true;
            best_sigma = sigma;
        }
    };

    std::function<void(std::size_t)> walk = [&](std::size_t block) {
        if (block == blocks.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = blocks[block];
        std::sort(p.begin() + static_cast<std::ptrdiff_t>(lo), p.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            walk(block + 1);
        } while (std::next_permutation(p.begin() + static_cast<std::ptrdiff_t>(lo),
                                       p.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    walk(0);
    if (!have_best) best_sigma = {0};  // order 1
    return relabel(t, best_sigma);
}

}  // namespace gyrokit
