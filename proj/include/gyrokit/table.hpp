#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gyrokit {

/// Elements of a finite structure are the indices 0..n-1; 0 is always the identity.
using Element = int;

/// A permutation of 0..n-1, stored as its image vector.
using Permutation = std::vector<Element>;

/// An n x n operation table with entries[a][b] = a (+) b.
///
/// Every entry is a valid index; nothing else (identity, Latin property)
/// is implied by construction. Use validate_loop() for that.
class CayleyTable {
public:
    CayleyTable() = default;

    /// Builds a table from row-major entries. Throws std::invalid_argument
    /// when the size is not n*n or an entry is out of range.
    CayleyTable(std::size_t order, std::vector<Element> entries);

    std::size_t order() const noexcept { return order_; }

    Element operator()(Element a, Element b) const noexcept {
        return entries_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
    }

    Element at(Element a, Element b) const;

    std::span<const Element> row(Element a) const noexcept {
        return {entries_.data() + static_cast<std::size_t>(a) * order_, order_};
    }

    std::span<const Element> entries() const noexcept { return entries_; }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
    friend auto operator<=>(const CayleyTable& x, const CayleyTable& y) {
        if (auto c = x.order_ <=> y.order_; c != 0) return c;
        return x.entries_ <=> y.entries_;
    }

private:
    std::size_t order_ = 0;
    std::vector<Element> entries_;
};

/// Raised by parse_table with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Reads the `.gyt` format: optional '#' comment lines, a decimal order n,
/// then n rows of n space-separated indices.
CayleyTable parse_table(std::istream& in);
CayleyTable parse_table(std::string_view text);

/// Inverse of parse_table; the output parses back to an equal table.
std::string serialize_table(const CayleyTable& t);

enum class LoopViolationKind { NoIdentity, RowNotPermutation, ColumnNotPermutation, OutOfRange };

const char* to_string(LoopViolationKind kind);

struct LoopViolation {
    LoopViolationKind kind;
    /// Offending (row, column) cells. For row/column violations these are
    /// the cells holding a repeated value; for NoIdentity, the cells in row
    /// or column 0 that break identity.
    std::vector<std::pair<Element, Element>> cells;
};

struct LoopCheckResult {
    bool valid = true;
    std::vector<LoopViolation> violations;
};

/// Checks that 0 is a two-sided identity and that every row and column is a
/// permutation. At most one violation is reported per row and per column.
LoopCheckResult validate_loop(const CayleyTable& t);

/// Same check on raw row-major cells that may hold out-of-range values.
LoopCheckResult validate_loop(std::size_t order, std::span<const Element> cells);

/// Relabels a table: result(sigma[a], sigma[b]) = sigma[t(a, b)].
CayleyTable relabel(const CayleyTable& t, std::span<const Element> sigma);

}  // namespace gyrokit
