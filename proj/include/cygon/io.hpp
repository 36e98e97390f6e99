#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cygon/certificates.hpp"
#include "cygon/error.hpp"
#include "cygon/graph.hpp"
#include "cygon/mappings.hpp"
#include "cygon/matroid.hpp"
#include "cygon/rational.hpp"

namespace cygon {

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

namespace detail {

struct TokenLine {
    int number = 0;
    std::vector<std::string> tokens;
};

// Whole-stream tokenizer: '#' starts a comment, blank lines vanish, every
// surviving line keeps its 1-based number for error messages.
inline std::vector<TokenLine> tokenize(std::istream& in) {
    std::vector<TokenLine> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        TokenLine line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.push_back(raw.substr(start, i - start));
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

inline long long parse_integer(const TokenLine& line, const std::string& token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line.number, "expected an integer, got '" + token + "'");
    return value;
}

inline int parse_element(const TokenLine& line, const std::string& token) {
    long long value = parse_integer(line, token);
    if (value < 0 || value >= kMaxGroundSetSize)
        throw ParseError(line.number, "element id " + token + " out of range");
    return static_cast<int>(value);
}

inline void expect_tokens(const TokenLine& line, std::size_t count, const char* what) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, std::string("expected ") + what);
}

}  // namespace detail

// Matroid descriptions are dispatched on the first token of the first line:
//   graph <n>            followed by one "u v" line per edge
//   uniform <r> <m>
//   linear <p> <rows> <cols>   followed by the matrix, rationals when p = 0
//   partition            followed by one "capacity size" line per block
//   bases                followed by one line of element ids per base
inline Matroid parse_matroid(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(0, "empty matroid description");
    const auto& head = lines.front();
    const std::string& kind = head.tokens.front();

    if (kind == "graph") {
        detail::expect_tokens(head, 2, "'graph <vertex count>'");
        long long n = detail::parse_integer(head, head.tokens[1]);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            detail::expect_tokens(lines[i], 2, "an edge line 'u v'");
            edges.emplace_back(static_cast<int>(detail::parse_integer(lines[i], lines[i].tokens[0])),
                               static_cast<int>(detail::parse_integer(lines[i], lines[i].tokens[1])));
        }
        return Matroid::graphic(Graph(static_cast<int>(n), edges));
    }

    if (kind == "uniform") {
        detail::expect_tokens(head, 3, "'uniform <rank> <size>'");
        if (lines.size() > 1)
            throw ParseError(lines[1].number, "unexpected input after the uniform header");
        return Matroid::uniform(static_cast<int>(detail::parse_integer(head, head.tokens[1])),
                                static_cast<int>(detail::parse_integer(head, head.tokens[2])));
    }

    if (kind == "linear") {
        detail::expect_tokens(head, 4, "'linear <p> <rows> <cols>'");
        long long p = detail::parse_integer(head, head.tokens[1]);
        long long rows = detail::parse_integer(head, head.tokens[2]);
        long long cols = detail::parse_integer(head, head.tokens[3]);
        if (rows < 0 || cols < 0) throw ParseError(head.number, "negative matrix dimensions");
        if (lines.size() != static_cast<std::size_t>(rows) + 1)
            throw ParseError(head.number, "expected exactly " + std::to_string(rows) +
                                              " matrix rows after the header");
        if (p == 0) {
            std::vector<std::vector<Rational>> matrix;
            for (long long i = 0; i < rows; ++i) {
                const auto& line = lines[static_cast<std::size_t>(i) + 1];
                detail::expect_tokens(line, static_cast<std::size_t>(cols), "a full matrix row");
                std::vector<Rational> row;
                for (const auto& tok : line.tokens) {
                    try {
                        row.push_back(parse_rational(tok));
                    } catch (const Error&) {
                        throw ParseError(line.number, "bad rational entry '" + tok + "'");
                    }
                }
                matrix.push_back(std::move(row));
            }
            return Matroid::linear_rational(matrix);
        }
        std::vector<std::vector<long long>> matrix;
        for (long long i = 0; i < rows; ++i) {
            const auto& line = lines[static_cast<std::size_t>(i) + 1];
            detail::expect_tokens(line, static_cast<std::size_t>(cols), "a full matrix row");
            std::vector<long long> row;
            for (const auto& tok : line.tokens) {
                long long v = detail::parse_integer(line, tok) % p;
                row.push_back(v < 0 ? v + p : v);
            }
            matrix.push_back(std::move(row));
        }
        return Matroid::linear_gf(p, matrix);
    }

    if (kind == "partition") {
        detail::expect_tokens(head, 1, "'partition' with no further tokens on its line");
        std::vector<std::pair<int, int>> blocks;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            detail::expect_tokens(lines[i], 2, "a block line 'capacity size'");
            long long cap = detail::parse_integer(lines[i], lines[i].tokens[0]);
            long long size = detail::parse_integer(lines[i], lines[i].tokens[1]);
            if (cap < 0 || cap > kMaxGroundSetSize || size < 0 || size > kMaxGroundSetSize)
                throw ParseError(lines[i].number, "block capacity and size must be in [0, " +
                                                      std::to_string(kMaxGroundSetSize) + "]");
            blocks.emplace_back(static_cast<int>(cap), static_cast<int>(size));
        }
        return Matroid::partition(blocks);
    }

    if (kind == "bases") {
        detail::expect_tokens(head, 1, "'bases' with no further tokens on its line");
        if (lines.size() < 2) throw ParseError(head.number, "at least one base line required");
        int size = 0;
        std::vector<Subset> bases;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            Subset b = 0;
            for (const auto& tok : lines[i].tokens) {
                int e = detail::parse_element(lines[i], tok);
                if (contains(b, e))
                    throw ParseError(lines[i].number, "repeated element " + tok + " in a base");
                b |= singleton(e);
                size = std::max(size, e + 1);
            }
            bases.push_back(b);
        }
        return Matroid::explicit_bases(size, bases);
    }

    throw ParseError(head.number, "unknown matroid kind '" + kind + "'");
}

// Weight files are plain whitespace-separated integers, one per element.
inline std::vector<long long> parse_weights(std::istream& in, int expected) {
    auto lines = detail::tokenize(in);
    std::vector<long long> weights;
    for (const auto& line : lines)
        for (const auto& tok : line.tokens) weights.push_back(detail::parse_integer(line, tok));
    if (static_cast<int>(weights.size()) != expected)
        throw ParseError(lines.empty() ? 0 : lines.back().number,
                         "expected " + std::to_string(expected) + " weights, got " +
                             std::to_string(weights.size()));
    return weights;
}

// JSON emission.  Rationals travel as "P" or "P/Q" strings, subsets as
// ascending id arrays, mappings as [element, value] pairs.
inline nlohmann::json json_of(const Rational& r) { return format_rational(r); }

inline nlohmann::json json_of(Subset s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : elements(s)) arr.push_back(e);
    return arr;
}

inline nlohmann::json json_of(const GonMapping& mapping) {
    nlohmann::json pairs = nlohmann::json::array();
    for (int e = 0; e < mapping.size(); ++e)
        pairs.push_back({e, mapping.position[static_cast<std::size_t>(e)]});
    return {{"D", mapping.gon}, {"mapping", pairs}, {"weights", mapping.weight}};
}

inline nlohmann::json json_of(const CircleMapping& mapping) {
    nlohmann::json positions = nlohmann::json::array();
    for (const Rational& p : mapping.position) positions.push_back(format_rational(p));
    return {{"d", format_rational(mapping.circumference)},
            {"positions", positions},
            {"mode", mapping.mode == WindowMode::Independent ? "independent" : "spanning"}};
}

inline nlohmann::json json_of(const CyclicOrdering& ordering) {
    return {{"ordering", ordering.sequence}};
}

inline nlohmann::json json_of(const BaseCover& cover) {
    nlohmann::json bases = nlohmann::json::array();
    for (Subset b : cover.bases) bases.push_back(json_of(b));
    return {{"cover", bases}};
}

inline nlohmann::json json_of(const FractionalWeights& fw) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [base, weight] : fw.entries)
        entries.push_back({json_of(base), format_rational(weight)});
    return {{"weights", entries}, {"total", format_rational(fw.total())}};
}

inline nlohmann::json json_of(const Violation& v) {
    return {{"violation",
             {{"condition", v.condition},
              {"witness", json_of(v.witness)},
              {"lhs", format_rational(v.lhs)},
              {"rhs", format_rational(v.rhs)}}}};
}

// Human-readable emission, one fact per line.
inline std::string format_text(const GonMapping& mapping) {
    std::string out = "D = " + std::to_string(mapping.gon) + "\n";
    for (int e = 0; e < mapping.size(); ++e)
        out += std::to_string(e) + " -> " +
               std::to_string(mapping.position[static_cast<std::size_t>(e)]) + "  [weight " +
               std::to_string(mapping.weight[static_cast<std::size_t>(e)]) + "]\n";
    return out;
}

inline std::string format_text(const CircleMapping& mapping) {
    std::string out = "d = " + format_rational(mapping.circumference) + "\n";
    for (int e = 0; e < mapping.size(); ++e)
        out += std::to_string(e) + " -> " +
               format_rational(mapping.position[static_cast<std::size_t>(e)]) + "\n";
    return out;
}

inline std::string format_text(const CyclicOrdering& ordering) {
    std::string out;
    for (std::size_t i = 0; i < ordering.sequence.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ordering.sequence[i]);
    }
    out += '\n';
    return out;
}

inline std::string format_text(const BaseCover& cover) {
    std::string out;
    for (Subset b : cover.bases) out += format_subset(b) + "\n";
    return out;
}

inline std::string format_text(const FractionalWeights& fw) {
    std::string out;
    for (const auto& [base, weight] : fw.entries)
        out += format_subset(base) + " : " + format_rational(weight) + "\n";
    out += "total = " + format_rational(fw.total()) + "\n";
    return out;
}

}  // namespace cygon
