#include "gyrokit/properties.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gyrokit {

TheoremViolation::TheoremViolation(std::string theorem, const CayleyTable& table, const std::string& detail)
    : std::runtime_error("counterexample or bug: " + theorem + " fails (" + detail + ") on table:\n" +
                         serialize_table(table)),
      theorem_(std::move(theorem)),
      table_text_(serialize_table(table)) {}

std::vector<std::size_t> prime_factorization(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
    auto f = prime_factorization(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool is_gyrocommutative(const Gyrogroup& g) {
    const auto n = static_cast<Element>(g.order());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (g.op(a, b) != g.gyr_apply(a, b, g.op(b, a))) return false;
    return true;
}

bool StructureReport::all_hold() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.holds; });
}

std::vector<std::string> StructureReport::holding() const {
    std::vector<std::string> out;
    for (const auto& l : laws)
        if (l.holds) out.push_back(l.law);
    return out;
}

StructureReport check_structure(const CayleyTable& t) {
    if (!validate_loop(t).valid) throw std::invalid_argument("check_structure requires a loop table");
    const auto n = static_cast<Element>(t.order());

    std::vector<Element> li(t.order());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (t(b, a) == 0) li[a] = b;

    StructureReport r;
    auto law = [&](const char* name, auto&& find_witness) {
        LawCheck c{name, true, {}};
        if (auto w = find_witness(); !w.empty()) {
            c.holds = false;
            c.witness = std::move(w);
        }
        r.laws.push_back(std::move(c));
    };

    law("composition-law", [&]() -> std::vector<Element> {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const Element ab = t(a, b);
                for (Element c = 0; c < n; ++c) {
                    const Element lhs = t(a, t(b, c));
                    const Element gyr = t(li[ab], lhs);
                    if (lhs != t(ab, gyr)) return {a, b, c};
                }
            }
        return {};
    });

    law("left-bol", [&]() -> std::vector<Element> {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const Element aba = t(a, t(b, a));
                for (Element c = 0; c < n; ++c)
                    if (t(a, t(b, t(a, c))) != t(aba, c)) return {a, b, c};
            }
        return {};
    });

    // powers m.a by the left recursion, 0 <= m <= 2n
    auto powers = [&](Element a) {
        std::vector<Element> pw(2 * static_cast<std::size_t>(n) + 1);
        pw[0] = 0;
        for (std::size_t m = 1; m < pw.size(); ++m) pw[m] = t(a, pw[m - 1]);
        return pw;
    };

    law("left-power-alternative", [&]() -> std::vector<Element> {
        for (Element a = 0; a < n; ++a) {
            const auto pw = powers(a);
            for (Element x = 0; x < n; ++x) {
                Element y = x;  // L_a^m x
                for (Element m = 0; m <= n; ++m) {
                    if (t(pw[m], x) != y) return {a, m, x};
                    y = t(a, y);
                }
            }
        }
        return {};
    });

    law("power-associative", [&]() -> std::vector<Element> {
        for (Element a = 0; a < n; ++a) {
            const auto pw = powers(a);
            for (Element m = 0; m <= n; ++m)
                for (Element k = 0; k <= n; ++k)
                    if (t(pw[m], pw[k]) != pw[m + k]) return {a, m, k};
        }
        return {};
    });
    return r;
}

StructureReport check_structure(const Gyrogroup& g) {
    auto r = check_structure(g.table());
    // the materialized gyrations must agree with the composition law as well
    const auto n = static_cast<Element>(g.order());
    auto& comp = r.laws.front();
    for (Element a = 0; a < n && comp.holds; ++a)
        for (Element b = 0; b < n && comp.holds; ++b)
            for (Element c = 0; c < n; ++c)
                if (g.op(a, g.op(b, c)) != g.op(g.op(a, b), g.gyr_apply(a, b, c))) {
                    comp.holds = false;
                    comp.witness = {a, b, c};
                    break;
                }
    return r;
}

LagrangeReport check_lagrange(const Gyrogroup& g, std::size_t bound) {
    LagrangeReport r;
    r.order = g.order();
    for (auto& h : all_subgyrogroups(g, bound)) {
        DivisorEvidence e;
        e.divides = g.order() % h.size() == 0;
        e.is_subgroup = h.is_subgroup == Tri::Yes;
        e.members = std::move(h.members);
        r.holds = r.holds && e.divides;
        r.evidence.push_back(std::move(e));
    }
    return r;
}

bool has_wcp(const Gyrogroup& g, const SubSet& h) {
    std::set<std::size_t> orders;
    for (Element a : h.members) orders.insert(order_of(g, a));
    for (std::size_t p : prime_divisors(h.size()))
        if (!orders.count(p)) return false;
    return true;
}

bool has_wcp(const Gyrogroup& g) {
    SubSet all;
    for (std::size_t a = 0; a < g.order(); ++a) all.members.push_back(static_cast<Element>(a));
    return has_wcp(g, all);
}

bool has_scp(const Gyrogroup& g, std::size_t bound) {
    for (const auto& h : all_subgyrogroups(g, bound))
        if (!has_wcp(g, h)) return false;
    return true;
}

std::optional<SubSet> find_gyrocommutative_quotient(const Gyrogroup& g, std::size_t bound) {
    for (auto& h : all_subgyrogroups(g, bound)) {
        if (h.is_subgroup != Tri::Yes) continue;
        auto r = is_normal(g, h);
        if (r && is_gyrocommutative(r.witness->quotient)) return r.witness->normal_set;
    }
    return std::nullopt;
}

namespace {

std::string set_text(const std::vector<Element>& m) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < m.size(); ++i) s << (i ? "," : "") << m[i];
    s << '}';
    return s.str();
}

Element smallest_of_order(const std::vector<std::size_t>& orders, std::size_t k) {
    for (std::size_t a = 0; a < orders.size(); ++a)
        if (orders[a] == k) return static_cast<Element>(a);
    return -1;
}

}  // namespace

AnalysisReport analyze(const Gyrogroup& g, std::size_t bound) {
    const std::size_t n = g.order();
    const CayleyTable& t = g.table();
    AnalysisReport r;
    r.order = n;
    r.element_orders = element_orders(g);
    r.is_group = g.is_group();
    r.is_gyrocommutative = is_gyrocommutative(g);

    auto structure = check_structure(g);
    if (!structure.all_hold())
        for (const auto& l : structure.laws)
            if (!l.holds) throw TheoremViolation("structure law " + l.law, t, "witness " + set_text(l.witness));
    r.classification_notes.push_back("structure: composition law, left Bol identity, left power alternative, "
                                     "power associativity");

    for (std::size_t a = 0; a < n; ++a) {
        const auto k = r.element_orders[a];
        if (n % k != 0 || scalar(g, static_cast<long long>(n), static_cast<Element>(a)) != 0)
            throw TheoremViolation("element order divides |G|", t, "element " + std::to_string(a));
    }
    r.classification_notes.push_back("element-orders: |a| divides " + std::to_string(n) + " and " +
                                     std::to_string(n) + ".a = 0 for every a");

    const auto subs = all_subgyrogroups(g, bound);
    r.lagrange_ok = true;
    r.scp = true;
    for (const auto& h : subs) {
        SubgyroFacts f;
        f.members = h.members;
        f.divides = n % h.size() == 0;
        f.is_subgroup = h.is_subgroup == Tri::Yes;
        f.is_normal = is_normal(g, h).normal;
        r.lagrange_ok = r.lagrange_ok && f.divides;
        r.scp = r.scp && has_wcp(g, h);
        r.subgyrogroups.push_back(std::move(f));
    }
    r.wcp = has_wcp(g);

    if (!r.lagrange_ok) {
        for (const auto& f : r.subgyrogroups)
            if (!f.divides) throw TheoremViolation("Lagrange's theorem", t, "subgyrogroup " + set_text(f.members));
    }
    r.classification_notes.push_back("lagrange: all " + std::to_string(subs.size()) + " subgyrogroup orders divide " +
                                     std::to_string(n));

    for (const auto& h : subs) {
        if (h.is_subgroup != Tri::Yes) continue;
        auto nr = is_normal(g, h);
        if (nr && is_gyrocommutative(nr.witness->quotient)) {
            r.normal_subgroup_witness = nr.witness->normal_set;
            break;
        }
    }
    if (!r.normal_subgroup_witness)
        throw TheoremViolation("normal subgroup with gyrocommutative quotient", t, "none found");
    r.classification_notes.push_back("foguel-ungar: normal subgroup " + set_text(r.normal_subgroup_witness->members) +
                                     " has gyrocommutative quotient of order " +
                                     std::to_string(n / r.normal_subgroup_witness->size()));

    const auto f = prime_factorization(n);
    if (f.size() == 1) {
        const Element gen = smallest_of_order(r.element_orders, n);
        if (!r.is_group || gen < 0) throw TheoremViolation("prime order implies cyclic group", t, "not cyclic");
        r.classification_notes.push_back("prime-order: cyclic group of order " + std::to_string(n) +
                                         " generated by " + std::to_string(gen));
    } else if (f.size() == 2) {
        const std::size_t p = f[0], q = f[1];
        if (!r.scp) throw TheoremViolation("order pq implies strong Cauchy property", t, "SCP fails");
        r.classification_notes.push_back("order-pq: strong Cauchy property (" + std::to_string(p) + "*" +
                                         std::to_string(q) + ")");
        if (p == q) {
            if (!r.is_group) throw TheoremViolation("order p^2 implies group", t, "not associative");
            r.classification_notes.push_back("order-p^2: group");
        } else {
            const Element a = smallest_of_order(r.element_orders, p);
            const Element b = smallest_of_order(r.element_orders, q);
            if (a < 0 || b < 0) throw TheoremViolation("order pq two-generator theorem", t, "missing element order");
            std::set<Element> covered;
            for (std::size_t m = 0; m < p; ++m)
                for (std::size_t k = 0; k < q; ++k)
                    covered.insert(g.op(scalar(g, static_cast<long long>(m), a),
                                        scalar(g, static_cast<long long>(k), b)));
            if (covered.size() != n)
                throw TheoremViolation("order pq two-generator theorem", t, "decomposition covers " +
                                                                               std::to_string(covered.size()));
            r.generator_pair = {a, b};
            r.classification_notes.push_back("order-pq: G = {(m." + std::to_string(a) + ")+(k." + std::to_string(b) +
                                             ")} with |" + std::to_string(a) + "|=" + std::to_string(p) + ", |" +
                                             std::to_string(b) + "|=" + std::to_string(q));
        }
    } else if (f.size() == 3 && !r.is_gyrocommutative) {
        const bool cube = f[0] == f[2];
        const std::string tag = cube ? "order-p^3" : "order-pqr";
        if (!r.scp) throw TheoremViolation(tag + " nongyrocommutative implies strong Cauchy property", t, "SCP fails");
        r.classification_notes.push_back(tag + ": nongyrocommutative, strong Cauchy property");
    }
    return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["order"] = r.order;
    j["element_orders"] = r.element_orders;
    auto subs = nlohmann::ordered_json::array();
    for (const auto& f : r.subgyrogroups) {
        nlohmann::ordered_json s;
        s["members"] = f.members;
        s["size"] = f.members.size();
        s["divides_order"] = f.divides;
        s["is_subgroup"] = f.is_subgroup;
        s["is_normal"] = f.is_normal;
        subs.push_back(std::move(s));
    }
    j["subgyrogroups"] = std::move(subs);
    nlohmann::ordered_json flags;
    flags["is_group"] = r.is_group;
    flags["is_gyrocommutative"] = r.is_gyrocommutative;
    flags["lagrange"] = r.lagrange_ok;
    flags["wcp"] = r.wcp;
    flags["scp"] = r.scp;
    j["flags"] = std::move(flags);
    j["classification_notes"] = r.classification_notes;
    j["normal_subgroup_witness"] =
        r.normal_subgroup_witness ? nlohmann::ordered_json(r.normal_subgroup_witness->members) : nullptr;
    j["generator_pair"] = r.generator_pair
                              ? nlohmann::ordered_json{r.generator_pair->first, r.generator_pair->second}
                              : nlohmann::ordered_json(nullptr);
    return j;
}

nlohmann::ordered_json to_json(const LagrangeReport& r) {
    nlohmann::ordered_json j;
    j["order"] = r.order;
    j["lagrange"] = r.holds;
    auto ev = nlohmann::ordered_json::array();
    for (const auto& e : r.evidence) {
        nlohmann::ordered_json x;
        x["members"] = e.members;
        x["size"] = e.members.size();
        x["divides_order"] = e.divides;
        x["quotient"] = e.divides ? nlohmann::ordered_json(r.order / e.members.size()) : nullptr;
        x["is_subgroup"] = e.is_subgroup;
        ev.push_back(std::move(x));
    }
    j["evidence"] = std::move(ev);
    return j;
}

nlohmann::ordered_json to_json(const StructureReport& r) {
    nlohmann::ordered_json j;
    j["all_hold"] = r.all_hold();
    auto laws = nlohmann::ordered_json::array();
    for (const auto& l : r.laws) {
        nlohmann::ordered_json x;
        x["law"] = l.law;
        x["holds"] = l.holds;
        x["witness"] = l.witness;
        laws.push_back(std::move(x));
    }
    j["laws"] = std::move(laws);
    return j;
}

nlohmann::ordered_json to_json(const Morphism& m) { return nlohmann::ordered_json(m.map); }

}  // namespace gyrokit
