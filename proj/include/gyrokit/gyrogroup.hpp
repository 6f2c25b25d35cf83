#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyrokit/table.hpp"

namespace gyrokit {

struct GyroValidation;
GyroValidation validate_gyrogroup(const CayleyTable& t);

enum class Axiom {
    G1,                  // two-sided identity
    G2,                  // two-sided inverse
    G3Automorphism,      // gyr[a,b] is an automorphism
    G3Gyroassociativity, // left gyroassociative law
    G4,                  // left loop property
    RightGyroassoc,
    RightLoop,
};

const char* to_string(Axiom axiom);

/// A failed axiom together with the elements that exhibit the failure.
///
/// Witness layouts:
///   G1, G2               (a)
///   G3Automorphism       (a, b, x, y)   gyr[a,b](x+y) != gyr[a,b]x + gyr[a,b]y
///   others               (a, b, c)
struct AxiomViolation {
    Axiom axiom;
    std::vector<Element> witnesses;
};

/// A validated gyrogroup. Immutable; all accessors are unchecked fast paths,
/// the free functions below validate their arguments.
class Gyrogroup {
public:
    const CayleyTable& table() const noexcept { return table_; }
    std::size_t order() const noexcept { return table_.order(); }

    Element op(Element a, Element b) const noexcept { return table_(a, b); }
    Element inv(Element a) const noexcept { return inv_[static_cast<std::size_t>(a)]; }

    /// gyr[a,b] as a permutation view.
    std::span<const Element> gyr_view(Element a, Element b) const noexcept {
        const std::size_t n = order();
        return {gyrs_.data() + (static_cast<std::size_t>(a) * n + b) * n, n};


    }
    Element gyr_apply(Element a, Element b, Element c) const noexcept { return gyr_view(a, b)[c]; }

    /// True when every gyration is the identity, i.e. the operation is associative.
    bool is_group() const noexcept { return is_group_; }

    bool contains(Element a) const noexcept { return a >= 0 && static_cast<std::size_t>(a) < order(); }

private:
    friend GyroValidation validate_gyrogroup(const CayleyTable& t);
    Gyrogroup(CayleyTable table, std::vector<Element> inv, std::vector<Element> gyrs);

    CayleyTable table_;
    std::vector<Element> inv_;
    std::vector<Element> gyrs_;  // n^3, gyrs_[(a*n + b)*n + c] = gyr[a,b]c
    bool is_group_ = false;
};

struct GyroValidation {
    std::optional<Gyrogroup> gyrogroup;
    std::vector<AxiomViolation> violations;

    explicit operator bool() const noexcept { return gyrogroup.has_value(); }
};

/// Checks the two-sided characterization of a gyrogroup exhaustively.
///
/// The table must already be a loop (see validate_loop); passing anything
/// else throws std::invalid_argument. On success every gyr[a,b] is
/// materialized. On failure at most one witness per axiom is reported.
GyroValidation validate_gyrogroup(const CayleyTable& t);

/// Re-evaluates a violation directly against the table (gyr taken from the
/// gyrator identity with left inverses). True when the failure reproduces.
bool replay(const CayleyTable& t, const AxiomViolation& v);

/// gyr[a,b] as a permutation. Throws std::out_of_range for bad indices.
Permutation gyr(const Gyrogroup& g, Element a, Element b);

Element neg(const Gyrogroup& g, Element a);

/// Gyrogroup cooperation a [+] b = a + gyr[a, -b]b.
Element coadd(const Gyrogroup& g, Element a, Element b);

/// The unique x with a + x = b, namely -a + b.
Element solve_left(const Gyrogroup& g, Element a, Element b);

/// The unique x with x + a = b, namely b [+] (-a).
Element solve_right(const Gyrogroup& g, Element a, Element b);

/// m.a via the left recursion m.a = a + ((m-1).a); negative m uses (-m).(-a).
Element scalar(const Gyrogroup& g, long long m, Element a);

/// a.m via the right recursion a.m = (a.(m-1)) + a. Agrees with scalar().
Element right_scalar(const Gyrogroup& g, long long m, Element a);

/// Least k > 0 with k.a = 0.
std::size_t order_of(const Gyrogroup& g, Element a);

/// Orders of all elements, indexed by element.
std::vector<std::size_t> element_orders(const Gyrogroup& g);

/// The left gyrotranslation x -> a + x.
Permutation left_translation(const Gyrogroup& g, Element a);

}  // namespace gyrokit
