#include "gyrokit/moebius.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace gyrokit::moebius {

namespace {

// rounding slack allowed on the unit circle test
constexpr double kBoundarySlack = 1e-12;

bool finite(DiskPoint z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

DiskPoint m_add(DiskPoint a, DiskPoint b) {
    if (!finite(a) || !finite(b)) throw std::domain_error("m_add: non-finite input");
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0) throw std::domain_error("m_add: input outside the open unit disk");
    const DiskPoint r = (a + b) / (1.0 + std::conj(a) * b);
    if (!finite(r) || std::abs(r) >= 1.0 + kBoundarySlack)
        throw std::domain_error("m_add: result left the unit disk");
    return r;
}

DiskPoint m_neg(DiskPoint a) { return -a; }

DiskPoint m_gyr(DiskPoint a, DiskPoint b, DiskPoint c) {
    const DiskPoint r = m_add(m_neg(m_add(a, b)), m_add(a, m_add(b, c)));
    if (!finite(r)) throw std::domain_error("m_gyr: non-finite intermediate");
    return r;
}

DiskPoint m_gyr_closed(DiskPoint a, DiskPoint b, DiskPoint c) {
    return (1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b) * c;
}

DiskPoint corrupted_add(DiskPoint a, DiskPoint b) { return a + b; }

SampleReport check_axioms_on(std::span<const Triple> triples, double tolerance, const Operation& op) {
    auto add = [&](DiskPoint x, DiskPoint y) { return op(x, y); };
    auto neg = [](DiskPoint x) { return -x; };
    auto gyr = [&](DiskPoint a, DiskPoint b, DiskPoint c) { return add(neg(add(a, b)), add(a, add(b, c))); };
    auto coadd = [&](DiskPoint a, DiskPoint b) { return add(a, gyr(a, neg(b), b)); };

    SampleReport r;
    r.samples = triples.size();
    r.tolerance = tolerance;
    auto& res = r.max_residual;
    for (const char* name :
         {"left-identity", "right-identity", "left-inverse", "right-inverse", "gyr-automorphism",
          "left-gyroassociativity", "right-gyroassociativity", "left-loop", "right-loop", "left-cancellation",
          "right-cancellation-1", "right-cancellation-2", "gyrocommutative", "gyr-closed-form", "gyr-modulus",
          "disk-closure"})
        res[name] = 0.0;

    auto note = [&](const char* name, double v) {
        if (!(v <= res[name])) res[name] = std::isnan(v) ? INFINITY : v;
    };

    for (const auto& [a, b, c] : triples) {
        const DiskPoint zero{0.0, 0.0};
        const DiskPoint ab = add(a, b), ba = add(b, a);
        const DiskPoint gabc = gyr(a, b, c);

        note("left-identity", std::abs(add(zero, a) - a));
        note("right-identity", std::abs(add(a, zero) - a));
        note("left-inverse", std::abs(add(neg(a), a)));
        note("right-inverse", std::abs(add(a, neg(a))));
        note("gyr-automorphism", std::abs(gyr(a, b, add(c, a)) - add(gabc, gyr(a, b, a))));
        note("left-gyroassociativity", std::abs(add(a, add(b, c)) - add(ab, gabc)));
        note("right-gyroassociativity", std::abs(add(ab, c) - add(a, add(b, gyr(b, a, c)))));
        note("left-loop", std::abs(gabc - gyr(ab, b, c)));
        note("right-loop", std::abs(gabc - gyr(a, ba, c)));
        note("left-cancellation", std::abs(add(neg(a), add(a, b)) - b));
        note("right-cancellation-1", std::abs(coadd(add(b, neg(a)), a) - b));
        note("right-cancellation-2", std::abs(add(coadd(b, neg(a)), a) - b));
        note("gyrocommutative", std::abs(ab - gyr(a, b, ba)));
        note("gyr-closed-form", std::abs(gabc - m_gyr_closed(a, b, c)));
        note("gyr-modulus", std::abs(std::abs(gabc) - std::abs(c)));
        note("disk-closure", std::max(0.0, std::abs(ab) - 1.0));
    }

    r.pass = true;
    for (const auto& [name, v] : res)
        if (!(v <= tolerance)) r.pass = false;
    return r;
}

SampleReport m_check_axioms(std::size_t sample_count, std::uint64_t seed, double tolerance, double radius,
                            const Operation& op) {
    if (sample_count == 0) throw std::invalid_argument("m_check_axioms: sample_count must be positive");
    if (!(tolerance > 0)) throw std::invalid_argument("m_check_axioms: tolerance must be positive");
    if (!(radius > 0 && radius < 1)) throw std::invalid_argument("m_check_axioms: radius must lie in (0, 1)");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto point = [&] {
        const double rho = radius * std::sqrt(unit(rng));
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        return std::polar(rho, theta);
    };
    std::vector<Triple> triples(sample_count);
    for (auto& t : triples) {
        t.a = point();
        t.b = point();
        t.c = point();
    }
    return check_axioms_on(triples, tolerance, op);
}

nlohmann::ordered_json to_json(const SampleReport& r) {
    nlohmann::ordered_json j;
    j["samples"] = r.samples;
    j["tolerance"] = r.tolerance;
    nlohmann::ordered_json res;
    for (const auto& [name, v] : r.max_residual) res[name] = v;
    j["max_residual"] = std::move(res);
    j["pass"] = r.pass;
    return j;
}

}  // namespace gyrokit::moebius
