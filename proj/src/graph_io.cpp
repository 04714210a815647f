#include "totdom/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "totdom/errors.hpp"

namespace totdom {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::uint64_t pair_count(std::uint64_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

std::string_view trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<long long> as_integer(std::string_view token) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) return std::nullopt;
    return value;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw UsageError("unknown graph format '" + std::string(name) + "' (expected graph6 or edgelist)");
}

std::string_view format_name(GraphFormat format) {
    return format == GraphFormat::graph6 ? "graph6" : "edgelist";
}

Graph parse_graph6(std::string_view line, std::size_t line_number) {
    std::size_t base = 0;
    if (line.starts_with(kGraph6Header)) base = kGraph6Header.size();
    std::string_view body = line.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= body.size()) throw ParseError("graph6 input truncated", line_number, base + i);
        int c = static_cast<unsigned char>(body[i]);
        if (c < kBias || c > 126)
            throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", line_number,
                             base + i);
        return c - kBias;
    };

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (byte_at(0) < 63) {
        n = static_cast<std::uint64_t>(byte_at(0));
        pos = 1;
    } else if (body.size() > 1 && byte_at(1) < 63) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(i));
        pos = 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(i));
        pos = 8;
    }
    if (n > static_cast<std::uint64_t>(kMaxOrder))
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds the limit " + std::to_string(kMaxOrder),
                         line_number, base);

    const std::uint64_t bits = pair_count(n);
    const std::uint64_t expected = (bits + 5) / 6;
    if (body.size() - pos != expected)
        throw ParseError("graph6 body has " + std::to_string(body.size() - pos) + " bytes, expected " +
                             std::to_string(expected) + " for order " + std::to_string(n),
                         line_number, base + std::min<std::size_t>(body.size(), pos));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        const VertexSet& nj = g.neighbors(j);
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (nj.contains(i) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    struct Token {
        std::string_view text;
        std::size_t line;
        std::size_t offset;
    };
    std::vector<std::pair<Token, Token>> pairs;
    std::optional<long long> header;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++line_no;
        std::string_view content = raw.substr(0, raw.find('#'));

        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < content.size()) {
            while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
            std::size_t j = i;
            while (j < content.size() && !std::isspace(static_cast<unsigned char>(content[j]))) ++j;
            if (j > i) tokens.push_back({content.substr(i, j - i), line_no, i});
            i = j;
        }

        if (!tokens.empty()) {
            if (tokens.size() != 2)
                throw ParseError("expected two tokens per line, found " + std::to_string(tokens.size()), line_no,
                                 tokens.front().offset);
            if (tokens[0].text == "n" && pairs.empty() && !header) {
                header = as_integer(tokens[1].text);
                if (!header || *header > kMaxOrder)
                    throw ParseError("bad vertex count '" + std::string(tokens[1].text) + "'", line_no,
                                     tokens[1].offset);
            } else {
                pairs.emplace_back(tokens[0], tokens[1]);
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }

    bool label_mode = std::any_of(pairs.begin(), pairs.end(), [](const auto& p) {
        return !as_integer(p.first.text) || !as_integer(p.second.text);
    });

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    long long n = header.value_or(0);

    if (label_mode) {
        std::unordered_map<std::string_view, Vertex> ids;
        auto id_of = [&](const Token& t) {
            auto [it, inserted] = ids.emplace(t.text, static_cast<Vertex>(labels.size()));
            if (inserted) {
                if (header && static_cast<long long>(labels.size()) >= *header)
                    throw ParseError("more distinct labels than the declared " + std::to_string(*header) + " vertices",
                                     t.line, t.offset);
                labels.emplace_back(t.text);
            }
            return it->second;
        };
        for (auto& [a, b] : pairs) {
            Vertex u = id_of(a);
            Vertex v = id_of(b);
            if (u == v) throw ParseError("self-loop at '" + std::string(a.text) + "'", a.line, a.offset);
            edges.emplace_back(u, v);
        }
        n = std::max<long long>(n, static_cast<long long>(labels.size()));
        for (auto i = static_cast<long long>(labels.size()); i < n; ++i) labels.push_back("#" + std::to_string(i));
    } else {
        for (auto& [a, b] : pairs) {
            long long u = *as_integer(a.text);
            long long v = *as_integer(b.text);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), a.line, a.offset);
            for (const Token* t : {&a, &b}) {
                long long id = *as_integer(t->text);
                if (header && id >= *header)
                    throw ParseError("vertex id " + std::to_string(id) + " >= declared order " + std::to_string(*header),
                                     t->line, t->offset);
                if (id >= kMaxOrder) throw ParseError("vertex id exceeds the order limit", t->line, t->offset);
            }
            if (!header) n = std::max({n, u + 1, v + 1});
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return Graph(static_cast<int>(n), edges, std::move(labels));
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::edgelist) return parse_edgelist(text);
    std::string_view line = trim(text);
    if (line.find('\n') != std::string_view::npos)
        throw ParseError("expected a single graph6 line; use a stream reader for multiple graphs", 1,
                         line.find('\n'));
    return parse_graph6(line);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edgelist(g);
}

std::optional<Graph> Graph6StreamReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        std::string_view body = trim(line);
        if (body.empty()) continue;
        return parse_graph6(body, line_);
    }
    return std::nullopt;
}

}  // namespace totdom
