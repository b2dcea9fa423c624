#pragma once

// Text file formats: sequences, vertex sets, hypergraphs, tabulated colourings
// and step-up schedules. Lines starting with '#' are comments everywhere.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/colour.hpp"
#include "ramsey/delta.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hedgehog.hpp"
#include "ramsey/seqpat.hpp"
#include "ramsey/stepup.hpp"

namespace ramsey::io {

struct Token {
    std::string_view text;
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
};

/// Whitespace-separated tokens of each non-comment line.
class Lines {
public:
    explicit Lines(std::string_view text)
    {
        std::size_t line_no = 0, at = 0;
        while (at <= text.size()) {
            const std::size_t end = std::min(text.find('\n', at), text.size());
            ++line_no;
            std::string_view line = text.substr(at, end - at);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            std::vector<Token> toks;
            std::size_t i = 0;
            while (i < line.size()) {
                if (line[i] == '#') break;
                if (std::isspace(static_cast<unsigned char>(line[i]))) {
                    ++i;
                    continue;
                }
                const std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
                toks.push_back({line.substr(start, i - start), line_no, start + 1});
            }
            if (!toks.empty()) lines_.push_back(std::move(toks));
            if (end == text.size()) break;
            at = end + 1;
        }
    }

    const std::vector<std::vector<Token>>& lines() const& noexcept { return lines_; }
    std::vector<std::vector<Token>> lines() && noexcept { return std::move(lines_); }

private:
    std::vector<std::vector<Token>> lines_;
};

inline std::uint64_t to_u64(const Token& t)
{
    std::uint64_t v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", t.line, t.column);
    return v;
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

// ---------------------------------------------------------------------------
// Sequences: whitespace-separated decimal integers (one line by convention).

inline Sequence parse_sequence(std::string_view text)
{
    Sequence s;
    for (const auto& line : Lines(text).lines())
        for (const auto& t : line) s.push_back(static_cast<Value>(to_u64(t)));
    return s;
}

inline std::string format_sequence(SequenceView s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out + "\n";
}

// ---------------------------------------------------------------------------
// Vertex sets: header `m=<width>`, then decimal vertex values.

struct VertexSet {
    std::size_t width = 0;
    std::vector<BinVertex> vertices;
};

inline VertexSet parse_vertex_set(std::string_view text)
{
    const auto& lines = Lines(text).lines();
    if (lines.empty()) throw ParseError("missing `m=` header", 1, 1);
    const Token& head = lines.front().front();
    if (!head.text.starts_with("m=")) throw ParseError("expected `m=<width>` header", head.line, head.column);
    Token w = head;
    w.text.remove_prefix(2);
    w.column += 2;
    VertexSet vs;
    vs.width = static_cast<std::size_t>(to_u64(w));
    if (vs.width < 1) throw ParseError("width must be positive", w.line, w.column);
    bool first = true;
    for (const auto& line : lines)
        for (const auto& t : line) {
            if (first) {
                first = false;
                continue;
            }
            try {
                vs.vertices.push_back(BinVertex::parse(t.text, vs.width));
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), t.line, t.column);
            }
        }
    return vs;
}

inline std::string format_vertex_set(const std::vector<BinVertex>& vs, std::size_t width)
{
    std::string out = "m=" + std::to_string(width) + "\n";
    for (const auto& v : vs) out += v.to_string() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Hypergraphs: header `r |V| |E|`, then one edge per line (0-based vertex ids),
// optionally followed by `: colour`.

inline Hypergraph parse_hypergraph(std::string_view text)
{
    const auto& lines = Lines(text).lines();
    if (lines.empty()) throw ParseError("missing `r |V| |E|` header", 1, 1);
    const auto& head = lines.front();
    if (head.size() != 3) throw ParseError("header must be `r |V| |E|`", head.front().line, head.front().column);
    const std::size_t r = to_u64(head[0]), nv = to_u64(head[1]), ne = to_u64(head[2]);
    if (lines.size() - 1 != ne)
        throw ParseError("header announces " + std::to_string(ne) + " edges, file has " +
                             std::to_string(lines.size() - 1),
                         head[2].line, head[2].column);
    std::vector<VertexList> edges;
    std::vector<std::uint32_t> colours;
    bool coloured = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        VertexList e;
        std::size_t i = 0;
        for (; i < line.size() && line[i].text != ":"; ++i) {
            const auto v = to_u64(line[i]);
            if (v >= nv) throw ParseError("vertex outside [0,|V|)", line[i].line, line[i].column);
            e.push_back(v);
        }
        if (e.size() != r)
            throw ParseError("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r),
                             line.front().line, line.front().column);
        if (i < line.size()) {
            if (i + 2 != line.size()) throw ParseError("expected one colour after ':'", line[i].line, line[i].column);
            if (li > 1 && !coloured) throw ParseError("colours must be given for all edges or none", line[i].line, 1);
            coloured = true;
            colours.push_back(static_cast<std::uint32_t>(to_u64(line[i + 1])));
        } else if (coloured) {
            throw ParseError("colours must be given for all edges or none", line.front().line, 1);
        }
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph::make(r, nv, std::move(edges), std::move(colours));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), head.front().line, 1);
    }
}

inline std::string format_hypergraph(const Hypergraph& h)
{
    std::string out =
        std::to_string(h.r) + " " + std::to_string(h.vertex_count) + " " + std::to_string(h.edges.size()) + "\n";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        for (std::size_t j = 0; j < h.edges[i].size(); ++j) out += (j ? " " : "") + std::to_string(h.edges[i][j]);
        if (!h.colours.empty()) out += " : " + std::to_string(h.colours[i]);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tabulated colourings: header `k n q`, then `v1 .. vk colour` per edge.

inline Colouring parse_colouring(std::string_view text, std::string origin = {})
{
    const auto& lines = Lines(text).lines();
    if (lines.empty()) throw ParseError("missing `k n q` header", 1, 1);
    const auto& head = lines.front();
    if (head.size() != 3) throw ParseError("header must be `k n q`", head.front().line, head.front().column);
    const std::size_t k = to_u64(head[0]);
    const std::uint64_t n = to_u64(head[1]), q = to_u64(head[2]);
    if (k < 1 || q < 1 || q > 65535) throw ParseError("need k >= 1 and 1 <= q <= 65535", head[0].line, 1);
    const std::uint64_t edges = binomial(n, k);
    if (edges == kSaturated || edges > (std::uint64_t{1} << 28))
        throw ParseError("colouring too large to tabulate", head[1].line, head[1].column);
    std::vector<std::uint16_t> table(edges, 0);
    std::vector<std::uint64_t> ids(k);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        if (line.size() != k + 1)
            throw ParseError("expected " + std::to_string(k) + " vertices and a colour", line.front().line,
                             line.front().column);
        for (std::size_t i = 0; i < k; ++i) {
            ids[i] = to_u64(line[i]);
            if (ids[i] >= n) throw ParseError("vertex outside [0,n)", line[i].line, line[i].column);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw ParseError("edge repeats a vertex", line.front().line, line.front().column);
        const auto& ct = line[k];
        std::uint64_t col = 0;
        try {
            const ColourId c = ColourId::parse(ct.text);
            if (c.kind() != ColourId::Kind::base) throw ParseError("", 0, 0);
            col = c.base_value();
        } catch (const ParseError&) {
            throw ParseError("tabulated colourings use base colours 1..q, got '" + std::string(ct.text) + "'", ct.line,
                             ct.column);
        }
        if (col < 1 || col > q) throw ParseError("colour outside [1,q]", ct.line, ct.column);
        auto& slot = table[colex_rank(ids)];
        if (slot) throw ParseError("edge listed twice", line.front().line, line.front().column);
        slot = static_cast<std::uint16_t>(col);
    }
    const auto missing = std::count(table.begin(), table.end(), 0);
    if (missing)
        throw ParseError(std::to_string(missing) + " of the C(n,k) edges are missing", lines.back().front().line + 1, 1);
    return make_tabulated(k, n, static_cast<std::uint32_t>(q), std::move(table), "tabulated", std::move(origin));
}

inline std::string format_colouring(const Colouring& c)
{
    const auto* tab = c.as<TabulatedColouring>();
    if (!tab) throw PreconditionError("only tabulated colourings export edge lists; lazy colourings export their schedule");
    const std::size_t k = c.uniformity();
    std::string out = std::to_string(k) + " " + std::to_string(tab->vertex_count()) + " " +
                      std::to_string(tab->colours()) + "\n";
    std::vector<std::uint64_t> ids(k);
    for_each_combination(tab->vertex_count(), k, [&](std::span<const std::size_t> e) {
        for (std::size_t i = 0; i < k; ++i) {
            ids[i] = e[i];
            out += std::to_string(e[i]) + " ";
        }
        out += std::to_string(tab->at_ids(ids)) + "\n";
    });
    return out;
}

// ---------------------------------------------------------------------------
// Schedules: `up1 k p`, `up1b k p`, `up2 k p`, optionally preceded by one base
// line, `base random k n q seed` or `base file <path>` (relative to the
// schedule's directory).

struct BaseSpec {
    enum class Kind { random, file };
    Kind kind = Kind::random;
    std::size_t k = 0;
    std::uint64_t n = 0;
    std::uint32_t q = 0;
    std::uint64_t seed = 0;
    std::string path;
};

struct Schedule {
    std::optional<BaseSpec> base;
    std::vector<Step> steps;
};

inline Schedule parse_schedule(std::string_view text)
{
    Schedule s;
    for (const auto& line : Lines(text).lines()) {
        const Token& op = line.front();
        if (op.text == "base") {
            if (s.base) throw ParseError("more than one base line", op.line, op.column);
            if (!s.steps.empty()) throw ParseError("base line must precede the steps", op.line, op.column);
            if (line.size() < 2) throw ParseError("base needs `random k n q seed` or `file <path>`", op.line, op.column + 5);
            BaseSpec b;
            if (line[1].text == "random") {
                if (line.size() != 6) throw ParseError("expected `base random k n q seed`", op.line, op.column);
                b.kind = BaseSpec::Kind::random;
                b.k = to_u64(line[2]);
                b.n = to_u64(line[3]);
                const auto q = to_u64(line[4]);
                if (q < 1 || q > 65535) throw ParseError("q must be in [1,65535]", line[4].line, line[4].column);
                b.q = static_cast<std::uint32_t>(q);
                b.seed = to_u64(line[5]);
            } else if (line[1].text == "file") {
                if (line.size() != 3) throw ParseError("expected `base file <path>`", op.line, op.column);
                b.kind = BaseSpec::Kind::file;
                b.path = std::string(line[2].text);
            } else {
                throw ParseError("unknown base kind '" + std::string(line[1].text) + "'", line[1].line, line[1].column);
            }
            s.base = b;
            continue;
        }
        Step st{};
        if (op.text == "up1") st.kind = Step::Kind::up1;
        else if (op.text == "up1b") st.kind = Step::Kind::up1b;
        else if (op.text == "up2") st.kind = Step::Kind::up2;
        else throw ParseError("unknown step '" + std::string(op.text) + "' (expected up1, up1b, up2 or base)", op.line, op.column);
        if (line.size() != 3) throw ParseError("expected `" + std::string(op.text) + " k p`", op.line, op.column);
        st.k = to_u64(line[1]);
        st.p = to_u64(line[2]);
        s.steps.push_back(st);
    }
    return s;
}

inline std::string format_schedule(const Schedule& s)
{
    std::string out;
    if (s.base) {
        if (s.base->kind == BaseSpec::Kind::random)
            out += "base random " + std::to_string(s.base->k) + " " + std::to_string(s.base->n) + " " +
                   std::to_string(s.base->q) + " " + std::to_string(s.base->seed) + "\n";
        else
            out += "base file " + s.base->path + "\n";
    }
    for (const auto& st : s.steps) out += to_string(st) + "\n";
    return out;
}

inline Colouring load_base(const BaseSpec& b, const std::filesystem::path& dir = {})
{
    if (b.kind == BaseSpec::Kind::random) return random_colouring(b.k, b.n, b.q, b.seed);
    const auto path = std::filesystem::path(b.path).is_absolute() ? std::filesystem::path(b.path) : dir / b.path;
    return parse_colouring(read_file(path), path.filename().string());
}

} // namespace ramsey::io
