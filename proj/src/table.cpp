#include "gyrokit/table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace gyrokit {

namespace {

constexpr std::size_t kMaxOrder = 4096;

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool parse_unsigned(std::string_view s, std::size_t& value) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ == 0) throw std::invalid_argument("table order must be positive");
    if (entries_.size() != order_ * order_)
        throw std::invalid_argument("table needs " + std::to_string(order_ * order_) + " entries, got " +
                                    std::to_string(entries_.size()));
    const auto n = static_cast<Element>(order_);
    for (Element e : entries_)
        if (e < 0 || e >= n) throw std::invalid_argument("table entry " + std::to_string(e) + " out of range");
}

Element CayleyTable::at(Element a, Element b) const {
    const auto n = static_cast<Element>(order_);
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("element index out of range");
    return (*this)(a, b);
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

CayleyTable parse_table(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    // header, skipping leading comments
    std::size_t order = 0;
    for (;;) {
        if (!std::getline(in, line)) throw ParseError("missing header", line_no + 1, 1);
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        auto tokens = split_tokens(line);
        if (tokens.size() != 1) throw ParseError("malformed header: expected a single order", line_no, 1);
        if (!parse_unsigned(tokens[0].text, order) || order == 0 || order > kMaxOrder)
            throw ParseError("malformed header: '" + std::string(tokens[0].text) + "' is not a valid order", line_no,
                             tokens[0].column);
        break;
    }

    std::vector<Element> entries;
    entries.reserve(order * order);
    for (std::size_t r = 0; r < order; ++r) {
        if (!std::getline(in, line))
            throw ParseError("wrong row count: expected " + std::to_string(order) + " rows, found " + std::to_string(r),
                             line_no + 1, 1);
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.size() != order)
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(tokens.size()) +
                                 " entries, expected " + std::to_string(order),
                             line_no, tokens.empty() ? 1 : tokens.back().column);
        for (const auto& tok : tokens) {
            std::size_t value = 0;
            if (!parse_unsigned(tok.text, value))
                throw ParseError("non-integer token '" + std::string(tok.text) + "'", line_no, tok.column);
            if (value >= order)
                throw ParseError("index " + std::string(tok.text) + " out of range 0.." + std::to_string(order - 1),
                                 line_no, tok.column);
            entries.push_back(static_cast<Element>(value));
        }
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (!is_blank(line)) throw ParseError("unexpected content after last row", line_no, 1);
    }
    return CayleyTable(order, std::move(entries));
}

CayleyTable parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_table(in);
}

std::string serialize_table(const CayleyTable& t) {
    std::string out = std::to_string(t.order()) + "\n";
    const auto n = static_cast<Element>(t.order());
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (b) out += ' ';
            out += std::to_string(t(a, b));
        }
        out += '\n';
    }
    return out;
}

const char* to_string(LoopViolationKind kind) {
    switch (kind) {
        case LoopViolationKind::NoIdentity: return "no-identity";
        case LoopViolationKind::RowNotPermutation: return "row-not-permutation";
        case LoopViolationKind::ColumnNotPermutation: return "column-not-permutation";
        case LoopViolationKind::OutOfRange: return "out-of-range";
    }
    return "unknown";
}

LoopCheckResult validate_loop(std::size_t order, std::span<const Element> cells) {
    LoopCheckResult result;
    const auto n = static_cast<Element>(order);
    auto cell = [&](Element a, Element b) { return cells[static_cast<std::size_t>(a) * order + b]; };

    LoopViolation range{LoopViolationKind::OutOfRange, {}};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (cell(a, b) < 0 || cell(a, b) >= n) range.cells.emplace_back(a, b);
    if (!range.cells.empty()) result.violations.push_back(std::move(range));

    LoopViolation identity{LoopViolationKind::NoIdentity, {}};
    for (Element b = 0; b < n; ++b)
        if (cell(0, b) != b) identity.cells.emplace_back(0, b);
    for (Element a = 1; a < n; ++a)
        if (cell(a, 0) != a) identity.cells.emplace_back(a, 0);
    if (!identity.cells.empty()) result.violations.push_back(std::move(identity));

    // first cell seen for each value, per line
    std::vector<Element> first(order);
    auto scan = [&](bool by_row) {
        for (Element line = 0; line < n; ++line) {
            std::fill(first.begin(), first.end(), -1);
            LoopViolation v{by_row ? LoopViolationKind::RowNotPermutation : LoopViolationKind::ColumnNotPermutation, {}};
            for (Element k = 0; k < n; ++k) {
                const Element a = by_row ? line : k;
                const Element b = by_row ? k : line;
                const Element value = cell(a, b);
                if (value < 0 || value >= n) continue;
                if (first[value] >= 0) {
                    const Element prev = first[value];
                    if (v.cells.empty() || v.cells.back() != (by_row ? std::pair{a, prev} : std::pair{prev, b}))
                        v.cells.push_back(by_row ? std::pair{a, prev} : std::pair{prev, b});
                    v.cells.emplace_back(a, b);
                } else {
                    first[value] = k;
                }
            }
            if (!v.cells.empty()) result.violations.push_back(std::move(v));
        }
    };
    scan(true);
    scan(false);

    result.valid = result.violations.empty();
    return result;
}

LoopCheckResult validate_loop(const CayleyTable& t) { return validate_loop(t.order(), t.entries()); }

CayleyTable relabel(const CayleyTable& t, std::span<const Element> sigma) {
    const std::size_t n = t.order();
    if (sigma.size() != n) throw std::invalid_argument("relabeling has wrong size");
    std::vector<Element> out(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            out[static_cast<std::size_t>(sigma[a]) * n + sigma[b]] =
                sigma[t(static_cast<Element>(a), static_cast<Element>(b))];
    return CayleyTable(n, std::move(out));
}

}  // namespace gyrokit
