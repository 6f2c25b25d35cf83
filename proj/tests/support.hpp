#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "gyrokit/groups.hpp"
#include "gyrokit/morphism.hpp"
#include "gyrokit/gyrogroup.hpp"
#include "gyrokit/table.hpp"

namespace testkit {

using gyrokit::CayleyTable;
using gyrokit::Element;
using gyrokit::Gyrogroup;

/// Validates or throws std::logic_error.
Gyrogroup make(const CayleyTable& t);

/// Search output at order n, validated; computed once per process.
const std::vector<Gyrogroup>& corpus(std::size_t n);

/// Search output at every order 1..n, concatenated by order.
std::vector<const Gyrogroup*> corpus_upto(std::size_t n);

/// The first non-group class at order 8 in canonical order, frozen from an
/// earlier search run.
CayleyTable g8_table();

// Independent oracles. None of these call into the library beyond the table
// type, so they can be used to judge it.

/// Every loop table of order n with identity 0 (normalized Latin squares).
std::vector<CayleyTable> all_loops(std::size_t n);

/// Left-sided gyrogroup axioms straight from the definition.
bool naive_is_gyrogroup(const CayleyTable& t);

/// Left Bol identity a(b(ac)) = (a(ba))c, checked directly.
bool naive_is_left_bol(const CayleyTable& t);

/// Isomorphism by trying every permutation that fixes 0.
bool naive_isomorphic(const CayleyTable& x, const CayleyTable& y);

/// Isomorphism classes of gyrogroups of order n by filtering all loops.
std::vector<CayleyTable> naive_classes(std::size_t n);

/// Order of a by repeated left addition, computed on the raw table.
std::size_t naive_order(const CayleyTable& t, Element a);

// Theorem oracles built from library pieces.

/// G/ker(phi) is isomorphic to phi(G). Returns an empty string on success,
/// otherwise what went wrong.
std::string first_isomorphism_failure(const Gyrogroup& g, const Gyrogroup& h, const std::vector<Element>& map);

/// For A <= G and B normal in G: A+B <= G, A∩B normal in A and
/// (A+B)/B isomorphic to A/(A∩B). Empty string on success.
std::string second_isomorphism_failure(const Gyrogroup& g, const std::vector<Element>& a, const std::vector<Element>& b);

/// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);

std::string read_file(const std::filesystem::path& p);

}  // namespace testkit
