#include "gyrokit/gyrogroup.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gyrokit {

namespace {

void check_index(const Gyrogroup& g, Element a) {
    if (!g.contains(a)) throw std::out_of_range("element " + std::to_string(a) + " out of range");
}

// Left inverses of a loop: li[a] is the b with b + a = 0.
std::vector<Element> left_inverses(const CayleyTable& t) {
    const auto n = static_cast<Element>(t.order());
    std::vector<Element> li(t.order(), -1);
    for (Element b = 0; b < n; ++b)
        for (Element a = 0; a < n; ++a)
            if (t(b, a) == 0) li[a] = b;
    return li;
}

}  // namespace

const char* to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::G1: return "G1";
        case Axiom::G2: return "G2";
        case Axiom::G3Automorphism: return "G3-automorphism";
        case Axiom::G3Gyroassociativity: return "G3-gyroassociativity";
        case Axiom::G4: return "G4";
        case Axiom::RightGyroassoc: return "right-gyroassoc";
        case Axiom::RightLoop: return "right-loop";
    }
    return "unknown";
}

bool replay(const CayleyTable& t, const AxiomViolation& v) {
    const auto li = left_inverses(t);
    auto gyr = [&](Element a, Element b, Element c) {
        Element ab = t(a, b);
        return li[ab] < 0 ? -1 : t(li[ab], t(a, t(b, c)));
    };
    const auto& w = v.witnesses;
    switch (v.axiom) {
        case Axiom::G1: return t(0, w[0]) != w[0] || t(w[0], 0) != w[0];
        case Axiom::G2: return li[w[0]] < 0 || t(w[0], li[w[0]]) != 0;
        case Axiom::G3Automorphism: {
            const Element a = w[0], b = w[1], x = w[2], y = w[3];
            return gyr(a, b, t(x, y)) != t(gyr(a, b, x), gyr(a, b, y));
        }
        case Axiom::G3Gyroassociativity: return t(w[0], t(w[1], w[2])) != t(t(w[0], w[1]), gyr(w[0], w[1], w[2]));
        case Axiom::G4: return gyr(w[0], w[1], w[2]) != gyr(t(w[0], w[1]), w[1], w[2]);
        case Axiom::RightGyroassoc: return t(t(w[0], w[1]), w[2]) != t(w[0], t(w[1], gyr(w[1], w[0], w[2])));
        case Axiom::RightLoop: return gyr(w[0], w[1], w[2]) != gyr(w[0], t(w[1], w[0]), w[2]);
    }
    return false;
}

Gyrogroup::Gyrogroup(CayleyTable table, std::vector<Element> inv, std::vector<Element> gyrs)
    : table_(std::move(table)), inv_(std::move(inv)), gyrs_(std::move(gyrs)) {
    const std::size_t n = order();
    is_group_ = true;
    for (std::size_t i = 0; i < gyrs_.size() && is_group_; ++i)
        if (gyrs_[i] != static_cast<Element>(i % n)) is_group_ = false;
}

GyroValidation validate_gyrogroup(const CayleyTable& t) {
    if (!validate_loop(t).valid) throw std::invalid_argument("validate_gyrogroup requires a loop table");

    const std::size_t n = t.order();
    const auto ne = static_cast<Element>(n);
    GyroValidation result;
    auto& out = result.violations;

    // G1 holds for any loop with identity 0; kept for completeness of the report.
    for (Element a = 0; a < ne; ++a)
        if (t(0, a) != a || t(a, 0) != a) {
            out.push_back({Axiom::G1, {a}});
            break;
        }

    const auto li = left_inverses(t);
    for (Element a = 0; a < ne; ++a)
        if (t(a, li[a]) != 0) {
            out.push_back({Axiom::G2, {a}});
            break;
        }

    // gyrator identity
    std::vector<Element> gyrs(n * n * n);
    for (Element a = 0; a < ne; ++a)
        for (Element b = 0; b < ne; ++b) {
            const Element neg_ab = li[t(a, b)];
            Element* g = gyrs.data() + (static_cast<std::size_t>(a) * n + b) * n;
            for (Element c = 0; c < ne; ++c) g[c] = t(neg_ab, t(a, t(b, c)));
        }
    auto gyr = [&](Element a, Element b) { return gyrs.data() + (static_cast<std::size_t>(a) * n + b) * n; };

    [&] {
        for (Element a = 0; a < ne; ++a)
            for (Element b = 0; b < ne; ++b) {
                const Element* g = gyr(a, b);
                for (Element x = 0; x < ne; ++x)
                    for (Element y = 0; y < ne; ++y)
                        if (g[t(x, y)] != t(g[x], g[y])) {
                            out.push_back({Axiom::G3Automorphism, {a, b, x, y}});
                            return;
                        }
            }
    }();

    auto scan = [&](Axiom axiom, auto&& holds) {
        for (Element a = 0; a < ne; ++a)
            for (Element b = 0; b < ne; ++b)
                for (Element c = 0; c < ne; ++c)
                    if (!holds(a, b, c)) {
                        out.push_back({axiom, {a, b, c}});
                        return;
                    }
    };
    scan(Axiom::G3Gyroassociativity,
         [&](Element a, Element b, Element c) { return t(a, t(b, c)) == t(t(a, b), gyr(a, b)[c]); });
    scan(Axiom::RightGyroassoc,
         [&](Element a, Element b, Element c) { return t(t(a, b), c) == t(a, t(b, gyr(b, a)[c])); });
    scan(Axiom::G4, [&](Element a, Element b, Element c) { return gyr(a, b)[c] == gyr(t(a, b), b)[c]; });
    scan(Axiom::RightLoop, [&](Element a, Element b, Element c) { return gyr(a, b)[c] == gyr(a, t(b, a))[c]; });

    if (out.empty()) result.gyrogroup = Gyrogroup(t, li, std::move(gyrs));
    return result;
}

Permutation gyr(const Gyrogroup& g, Element a, Element b) {
    check_index(g, a);
    check_index(g, b);
    auto view = g.gyr_view(a, b);
    return Permutation(view.begin(), view.end());
}

Element neg(const Gyrogroup& g, Element a) {
    check_index(g, a);
    return g.inv(a);
}

Element coadd(const Gyrogroup& g, Element a, Element b) {
    check_index(g, a);
    check_index(g, b);
    return g.op(a, g.gyr_apply(a, g.inv(b), b));
}

Element solve_left(const Gyrogroup& g, Element a, Element b) {
    check_index(g, a);
    check_index(g, b);
    return g.op(g.inv(a), b);
}

Element solve_right(const Gyrogroup& g, Element a, Element b) {
    check_index(g, a);
    check_index(g, b);
    return coadd(g, b, g.inv(a));
}

Element scalar(const Gyrogroup& g, long long m, Element a) {
    check_index(g, a);
    if (m < 0) {
        a = g.inv(a);
        m = -m;
    }
    Element x = 0;
    for (long long k = 0; k < m; ++k) x = g.op(a, x);
    return x;
}

Element right_scalar(const Gyrogroup& g, long long m, Element a) {
    check_index(g, a);
    if (m < 0) {
        a = g.inv(a);
        m = -m;
    }
    Element x = 0;
    for (long long k = 0; k < m; ++k) x = g.op(x, a);
    return x;
}

std::size_t order_of(const Gyrogroup& g, Element a) {
    check_index(g, a);
    Element x = a;
    std::size_t k = 1;
    while (x != 0) {
        x = g.op(a, x);
        if (++k > g.order()) throw std::logic_error("element has no finite order within |G|");
    }
    return k;
}

std::vector<std::size_t> element_orders(const Gyrogroup& g) {
    std::vector<std::size_t> out(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) out[a] = order_of(g, static_cast<Element>(a));
    return out;
}

Permutation left_translation(const Gyrogroup& g, Element a) {
    check_index(g, a);
    auto row = g.table().row(a);
    return Permutation(row.begin(), row.end());
}

}  // namespace gyrokit
