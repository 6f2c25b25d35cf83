#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyrokit/subgyro.hpp"

namespace gyrokit {

/// A map between the element sets of two gyrogroups.
struct Morphism {
    std::size_t source_order = 0;
    std::size_t target_order = 0;
    std::vector<Element> map;      // map[a] = phi(a)
    bool is_homomorphism = false;
    std::optional<SubSet> kernel;  // preimage of {0}, set when is_homomorphism
};

/// Exhaustively checks phi(a + b) = phi(a) + phi(b).
/// Throws std::invalid_argument when the map is not total on src.
Morphism check_homomorphism(const Gyrogroup& src, const Gyrogroup& dst, std::span<const Element> map);

/// phi(G) as a subset of the target.
SubSet image(const Morphism& phi);

struct QuotientGyrogroup {
    SubSet normal_set;
    std::vector<std::vector<Element>> cosets;  // index i is element i of `quotient`
    Gyrogroup quotient;
    Morphism projection;                        // a -> index of a + N
};

struct NormalityResult {
    bool normal = false;
    std::string reason;  // why N is not normal; empty when normal
    std::optional<QuotientGyrogroup> witness;

    explicit operator bool() const noexcept { return normal; }
};

/// Decides normality constructively.
///
/// N is normal iff its left cosets partition G, the coset operation
/// (a + N) + (b + N) = (a + b) + N does not depend on representatives, and
/// the coset table is a gyrogroup. In that case the canonical projection is
/// a homomorphism with kernel N, so N is a kernel. Conversely the kernel K
/// of any homomorphism has partitioning cosets (a + K is the fibre of
/// phi(a), by left cancellation) on which the operation is well defined, and
/// the coset table is isomorphic to the image, so a failure of any step
/// rules out every homomorphism with kernel N.
NormalityResult is_normal(const Gyrogroup& g, const SubSet& n);

/// G/N with cosets indexed by smallest representative. Throws
/// std::invalid_argument when N is not normal.
QuotientGyrogroup quotient(const Gyrogroup& g, const SubSet& n);

/// Sorted multiset of element orders.
std::vector<std::size_t> order_profile(const Gyrogroup& g);

/// An isomorphism g -> h, or nullopt when none exists. Backtracking over
/// order-preserving images with closure propagation.
std::optional<Morphism> find_isomorphism(const Gyrogroup& g, const Gyrogroup& h);

/// Every homomorphism g -> h, as image vectors in lexicographic order.
std::vector<std::vector<Element>> all_homomorphisms(const Gyrogroup& g, const Gyrogroup& h);

/// Lexicographically least table over relabelings that fix 0 and list
/// elements by non-decreasing order. Equal iff isomorphic.
CayleyTable canonical_form(const Gyrogroup& g);

}  // namespace gyrokit
