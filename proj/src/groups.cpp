#include "gyrokit/groups.hpp"

#include <stdexcept>

namespace gyrokit {

CayleyTable cyclic_group_table(std::size_t n) {
    std::vector<Element> e(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) e[a * n + b] = static_cast<Element>((a + b) % n);
    return CayleyTable(n, std::move(e));
}

CayleyTable dihedral_group_table(std::size_t k) {
    const std::size_t n = 2 * k;
    std::vector<Element> e(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const bool sx = x >= k, sy = y >= k;
            const std::size_t i = x % k, j = y % k;
            std::size_t out;
            if (!sx && !sy) out = (i + j) % k;               // r^i r^j
            else if (!sx && sy) out = k + (j + k - i) % k;    // r^i s r^j = s r^(j-i)
            else if (sx && !sy) out = k + (i + j) % k;        // s r^i r^j
            else out = (j + k - i) % k;                       // s r^i s r^j = r^(j-i)
            e[x * n + y] = static_cast<Element>(out);
        }
    return CayleyTable(n, std::move(e));
}

CayleyTable klein_four_table() { return direct_product(cyclic_group_table(2), cyclic_group_table(2)); }

CayleyTable symmetric3_table() { return dihedral_group_table(3); }

CayleyTable quaternion_table() {
    // unit products on basis 1, i, j, k: {sign, basis}
    static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<Element> e(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int bx = x / 2, by = y / 2;
            const bool negative = ((x % 2) ^ (y % 2) ^ (kSign[bx][by] < 0)) != 0;
            e[static_cast<std::size_t>(x * 8 + y)] = 2 * kBasis[bx][by] + (negative ? 1 : 0);
        }
    return CayleyTable(8, std::move(e));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Element> e(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto ax = static_cast<Element>(x / nb), bx = static_cast<Element>(x % nb);
            const auto ay = static_cast<Element>(y / nb), by = static_cast<Element>(y % nb);
            e[x * n + y] = static_cast<Element>(static_cast<std::size_t>(a(ax, ay)) * nb + b(bx, by));
        }
    return CayleyTable(n, std::move(e));
}

std::vector<std::pair<std::string, CayleyTable>> builtin_groups() {
    std::vector<std::pair<std::string, CayleyTable>> out;
    for (std::size_t n = 1; n <= 8; ++n) out.emplace_back("Z" + std::to_string(n), cyclic_group_table(n));
    out.emplace_back("K4", klein_four_table());
    out.emplace_back("S3", symmetric3_table());
    out.emplace_back("D4", dihedral_group_table(4));
    out.emplace_back("Q8", quaternion_table());
    return out;
}

Gyrogroup from_group(const CayleyTable& t) {
    if (!validate_loop(t).valid) throw std::invalid_argument("from_group: table is not a loop");
    const auto n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (t(a, t(b, c)) != t(t(a, b), c))
                    throw std::invalid_argument("from_group: operation is not associative at (" + std::to_string(a) +
                                                ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
    auto v = validate_gyrogroup(t);
    if (!v || !v.gyrogroup->is_group()) throw std::logic_error("associative loop failed gyrogroup validation");
    return std::move(*v.gyrogroup);
}

}  // namespace gyrokit
