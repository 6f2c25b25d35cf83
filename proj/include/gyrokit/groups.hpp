#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gyrokit/gyrogroup.hpp"

namespace gyrokit {

/// Z_n, element k is the residue k.
CayleyTable cyclic_group_table(std::size_t n);

/// Dihedral group of order 2k: r^i is i, s r^i is k + i.
CayleyTable dihedral_group_table(std::size_t k);

/// Klein four-group Z2 x Z2.
CayleyTable klein_four_table();

/// S3, presented as the dihedral group of order 6.
CayleyTable symmetric3_table();

/// Quaternion group: 1, -1, i, -i, j, -j, k, -k in that order.
CayleyTable quaternion_table();

/// (a1, b1) (+) (a2, b2) componentwise; pair (a, b) is a * |B| + b.
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

/// Z1..Z8, K4, S3, D4, Q8 with display names.
std::vector<std::pair<std::string, CayleyTable>> builtin_groups();

/// Validates an associative loop table as a gyrogroup with trivial gyrations.
/// Throws std::invalid_argument for non-loop or non-associative input.
Gyrogroup from_group(const CayleyTable& t);

}  // namespace gyrokit
