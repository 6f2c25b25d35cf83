#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>

#include <json.hpp>

namespace gyrokit::moebius {

/// A point of the open complex unit disk.
using DiskPoint = std::complex<double>;

/// Binary operation on the disk; the default is Moebius addition.
using Operation = std::function<DiskPoint(DiskPoint, DiskPoint)>;

/// a (+) b = (a + b) / (1 + conj(a) b).
/// Throws std::domain_error for non-finite input or a result on or outside
/// the unit circle (beyond rounding slack).
DiskPoint m_add(DiskPoint a, DiskPoint b);

DiskPoint m_neg(DiskPoint a);

/// gyr[a,b]c from the gyrator identity -(a + b) + (a + (b + c)).
DiskPoint m_gyr(DiskPoint a, DiskPoint b, DiskPoint c);

/// gyr[a,b]c = (1 + a conj(b)) / (1 + conj(a) b) * c, the rotation form.
DiskPoint m_gyr_closed(DiskPoint a, DiskPoint b, DiskPoint c);

struct Triple {
    DiskPoint a, b, c;
};

struct SampleReport {
    std::size_t samples = 0;
    double tolerance = 0;
    std::map<std::string, double> max_residual;  // per checked identity
    bool pass = false;
};

/// Residuals of the gyrogroup identities on explicit triples, with the
/// given operation standing in for Moebius addition (gyr and the inverse
/// are derived from it definitionally; the closed rotation form is always
/// the Moebius one, so it acts as an external oracle).
SampleReport check_axioms_on(std::span<const Triple> triples, double tolerance, const Operation& op = m_add);

/// Samples triples uniformly from the disk |z| <= radius with a seeded
/// generator and checks them. Deterministic for a given seed.
SampleReport m_check_axioms(std::size_t sample_count, std::uint64_t seed, double tolerance, double radius = 0.95,
                            const Operation& op = m_add);

/// (a + b) with the denominator dropped: the negative control.
DiskPoint corrupted_add(DiskPoint a, DiskPoint b);

nlohmann::ordered_json to_json(const SampleReport& r);

}  // namespace gyrokit::moebius
