#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gyrokit/morphism.hpp"

namespace gyrokit {

/// Raised when a theorem whose hypothesis holds fails on an instance.
/// Either the implementation is wrong or the table is a counterexample;
/// the offending table travels with the exception.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(std::string theorem, const CayleyTable& table, const std::string& detail);

    const std::string& theorem() const noexcept { return theorem_; }
    const std::string& table_text() const noexcept { return table_text_; }

private:
    std::string theorem_;
    std::string table_text_;
};

/// Distinct primes dividing n, ascending.
std::vector<std::size_t> prime_divisors(std::size_t n);

/// Prime factors of n with multiplicity, ascending.
std::vector<std::size_t> prime_factorization(std::size_t n);

bool is_gyrocommutative(const Gyrogroup& g);

struct LawCheck {
    std::string law;
    bool holds = true;
    std::vector<Element> witness;  // empty when the law holds
};

struct StructureReport {
    std::vector<LawCheck> laws;  // composition-law, left-bol, left-power-alternative, power-associative

    bool all_hold() const;
    std::vector<std::string> holding() const;
};

/// Structural laws every gyrogroup satisfies, checked exhaustively.
///
/// The loop overload works on any loop: gyr is taken from the gyrator
/// identity with left inverses, so the composition law is a genuine test.
/// Witness layouts: composition and Bol (a, b, c); left power alternative
/// (a, m, x); power associativity (a, m, k). Throws on non-loop input.
StructureReport check_structure(const CayleyTable& loop);
StructureReport check_structure(const Gyrogroup& g);

struct DivisorEvidence {
    std::vector<Element> members;
    bool divides = false;
    bool is_subgroup = false;
};

struct LagrangeReport {
    std::size_t order = 0;
    bool holds = true;
    std::vector<DivisorEvidence> evidence;  // one per subgyrogroup
};

LagrangeReport check_lagrange(const Gyrogroup& g, std::size_t bound = kDefaultEnumerationBound);

/// Every prime p | |G| has an element of order p. Vacuous for |G| = 1.
bool has_wcp(const Gyrogroup& g);

/// Weak Cauchy property of a subgyrogroup, using orders in the parent.
bool has_wcp(const Gyrogroup& g, const SubSet& h);

bool has_scp(const Gyrogroup& g, std::size_t bound = kDefaultEnumerationBound);

struct SubgyroFacts {
    std::vector<Element> members;
    bool divides = false;
    bool is_subgroup = false;
    bool is_normal = false;
};

struct AnalysisReport {
    std::size_t order = 0;
    std::vector<std::size_t> element_orders;
    std::vector<SubgyroFacts> subgyrogroups;
    bool is_group = false;
    bool is_gyrocommutative = false;
    bool lagrange_ok = false;
    bool wcp = false;
    bool scp = false;
    std::optional<SubSet> normal_subgroup_witness;  // normal subgroup with gyrocommutative quotient
    std::optional<std::pair<Element, Element>> generator_pair;  // order-pq decomposition
    std::vector<std::string> classification_notes;
};

/// Full report. Every classification result whose hypothesis matches |G| is
/// re-verified on this instance; a failure throws TheoremViolation.
AnalysisReport analyze(const Gyrogroup& g, std::size_t bound = kDefaultEnumerationBound);

/// First normal subgroup (in lattice order) whose quotient is gyrocommutative.
std::optional<SubSet> find_gyrocommutative_quotient(const Gyrogroup& g, std::size_t bound = kDefaultEnumerationBound);

nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const LagrangeReport& r);
nlohmann::ordered_json to_json(const StructureReport& r);
nlohmann::ordered_json to_json(const Morphism& m);

}  // namespace gyrokit
