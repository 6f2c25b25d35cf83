#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gyrokit/gyrogroup.hpp"

namespace gyrokit {

enum class Tri { Unknown, Yes, No };

inline Tri to_tri(bool b) noexcept { return b ? Tri::Yes : Tri::No; }
const char* to_string(Tri t);

/// A subset of a gyrogroup's elements with what is known about its role.
/// The parent gyrogroup is not stored; every operation takes it explicitly.
struct SubSet {
    std::vector<Element> members;  // sorted, unique
    Tri is_subgyrogroup = Tri::Unknown;
    Tri is_subgroup = Tri::Unknown;
    Tri is_normal = Tri::Unknown;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Element a) const;

    friend bool operator==(const SubSet& x, const SubSet& y) { return x.members == y.members; }
};

struct CosetDecomposition {
    SubSet subgroup_set;
    std::vector<std::vector<Element>> cosets;  // distinct a + H, ordered by smallest representative
    bool is_partition = false;
    std::optional<std::size_t> index;          // |G| / |H| when the cosets partition G
};

class EnumerationBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationBound = 16;
inline constexpr std::size_t kMaxEnumerationBound = 64;

/// Sorted, duplicate-free copy; throws on out-of-range members.
std::vector<Element> normalize_members(const Gyrogroup& g, std::span<const Element> s);

/// Closure under + and - (subgyrogroup criterion). Throws on an empty set.
bool is_subgyrogroup(const Gyrogroup& g, std::span<const Element> s);

/// Smallest subgyrogroup containing `a`, by worklist closure.
SubSet generate(const Gyrogroup& g, std::span<const Element> a);

/// {m.a : 0 <= m < |a|}, flagged as a subgroup.
SubSet cyclic(const Gyrogroup& g, Element a);

/// Every subgyrogroup exactly once, sorted by (size, members).
///
/// Starts from the cyclic subgyrogroups and keeps adjoining one element and
/// re-closing until no new subgyrogroup appears. No divisibility assumption
/// is used. Throws EnumerationBoundError when |G| > bound.
std::vector<SubSet> all_subgyrogroups(const Gyrogroup& g, std::size_t bound = kDefaultEnumerationBound);

/// Whether every gyr[a,b] with a, b in S fixes S pointwise.
/// Throws std::invalid_argument when S is not a subgyrogroup.
bool is_subgroup_subset(const Gyrogroup& g, const SubSet& s);

/// Distinct left cosets a + H. Throws std::invalid_argument when H is not a subgyrogroup.
CosetDecomposition left_cosets(const Gyrogroup& g, const SubSet& h);

/// The subgyrogroup as a gyrogroup in its own right. Element i of the result
/// is h.members[i]; since members are sorted, 0 maps to 0.
Gyrogroup induced(const Gyrogroup& g, const SubSet& h);

/// Re-expresses a subset of h in the local labels of induced(g, h).
std::vector<Element> localize(const SubSet& h, std::span<const Element> elements);

SubSet intersect(const SubSet& x, const SubSet& y);

}  // namespace gyrokit
