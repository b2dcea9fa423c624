#pragma once

// Colour identifiers and the colouring interface shared by tabulated, stepped-up
// and lifted colourings.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/functional/hash.hpp>

#include "ramsey/combinatorics.hpp"
#include "ramsey/delta.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

/// Structured colour: a base colour b, a product (inner, tag), a class colour
/// c_i, or a set of colours. Stored as a self-delimiting token string whose
/// lexicographic order is the canonical order.
class ColourId {
public:
    enum class Kind : std::uint32_t { base = 0, product = 1, cls = 2, set = 3 };
    using Tokens = boost::container::small_vector<std::uint32_t, 8>;

    ColourId() : tok_{0, 1} {}

    static ColourId base(std::uint32_t b)
    {
        ColourId c;
        c.tok_ = {tag_of(Kind::base), b};
        return c;
    }

    static ColourId product(const ColourId& inner, std::uint32_t tag)
    {
        ColourId c;
        c.tok_.clear();
        c.tok_.push_back(tag_of(Kind::product));
        c.tok_.insert(c.tok_.end(), inner.tok_.begin(), inner.tok_.end());
        c.tok_.push_back(tag);
        return c;
    }

    static ColourId cls(std::uint32_t i)
    {
        ColourId c;
        c.tok_ = {tag_of(Kind::cls), i};
        return c;
    }

    /// Members are sorted and deduplicated.
    static ColourId set(std::vector<ColourId> members)
    {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        ColourId c;
        c.tok_ = {tag_of(Kind::set), static_cast<std::uint32_t>(members.size())};
        for (const auto& m : members) c.tok_.insert(c.tok_.end(), m.tok_.begin(), m.tok_.end());
        return c;
    }

    Kind kind() const noexcept { return static_cast<Kind>(tok_[0]); }

    std::uint32_t base_value() const
    {
        expect(Kind::base);
        return tok_[1];
    }

    std::uint32_t class_index() const
    {
        expect(Kind::cls);
        return tok_[1];
    }

    std::uint32_t tag() const
    {
        expect(Kind::product);
        return tok_.back();
    }

    ColourId inner() const
    {
        expect(Kind::product);
        ColourId c;
        c.tok_.assign(tok_.begin() + 1, tok_.end() - 1);
        return c;
    }

    std::vector<ColourId> members() const
    {
        expect(Kind::set);
        std::vector<ColourId> out;
        std::size_t at = 2;
        for (std::uint32_t i = 0; i < tok_[1]; ++i) {
            const std::size_t len = extent(tok_, at);
            ColourId c;
            c.tok_.assign(tok_.begin() + static_cast<std::ptrdiff_t>(at),
                          tok_.begin() + static_cast<std::ptrdiff_t>(at + len));
            out.push_back(std::move(c));
            at += len;
        }
        return out;
    }

    const Tokens& tokens() const noexcept { return tok_; }

    /// "3", "(3,1)", "c2", "{1,2,4}" and nestings thereof.
    std::string to_string() const
    {
        std::string out;
        write(out, 0);
        return out;
    }

    static ColourId parse(std::string_view text)
    {
        std::size_t at = 0;
        ColourId c = read(text, at);
        if (at != text.size()) throw ParseError("trailing characters in colour '" + std::string(text) + "'", 1, at + 1);
        return c;
    }

    friend bool operator==(const ColourId&, const ColourId&) = default;
    friend std::strong_ordering operator<=>(const ColourId& a, const ColourId& b) noexcept
    {
        return std::lexicographical_compare_three_way(a.tok_.begin(), a.tok_.end(), b.tok_.begin(), b.tok_.end());
    }

    std::size_t hash() const noexcept { return boost::hash_range(tok_.begin(), tok_.end()); }

private:
    static constexpr std::uint32_t tag_of(Kind k) { return static_cast<std::uint32_t>(k); }

    void expect(Kind k) const
    {
        if (kind() != k) throw PreconditionError("colour " + to_string() + " has a different kind");
    }

    static std::size_t extent(const Tokens& t, std::size_t at)
    {
        switch (static_cast<Kind>(t[at])) {
        case Kind::base:
        case Kind::cls: return 2;
        case Kind::product: return 1 + extent(t, at + 1) + 1;
        case Kind::set: {
            std::size_t len = 2;
            for (std::uint32_t i = 0; i < t[at + 1]; ++i) len += extent(t, at + len);
            return len;
        }
        }
        throw Error("corrupt colour token");
    }

    std::size_t write(std::string& out, std::size_t at) const
    {
        switch (static_cast<Kind>(tok_[at])) {
        case Kind::base: out += std::to_string(tok_[at + 1]); return at + 2;
        case Kind::cls: out += "c" + std::to_string(tok_[at + 1]); return at + 2;
        case Kind::product: {
            out += '(';
            const std::size_t next = write(out, at + 1);
            out += ',' + std::to_string(tok_[next]) + ')';
            return next + 1;
        }
        case Kind::set: {
            out += '{';
            std::size_t next = at + 2;
            for (std::uint32_t i = 0; i < tok_[at + 1]; ++i) {
                if (i) out += ',';
                next = write(out, next);
            }
            out += '}';
            return next;
        }
        }
        throw Error("corrupt colour token");
    }

    static std::uint32_t read_number(std::string_view s, std::size_t& at)
    {
        const std::size_t start = at;
        std::uint64_t v = 0;
        while (at < s.size() && s[at] >= '0' && s[at] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(s[at] - '0');
            if (v > 0xffffffffu) throw ParseError("colour number too large", 1, start + 1);
            ++at;
        }
        if (at == start) throw ParseError("expected a number in colour '" + std::string(s) + "'", 1, at + 1);
        return static_cast<std::uint32_t>(v);
    }

    static void expect_char(std::string_view s, std::size_t& at, char ch)
    {
        if (at >= s.size() || s[at] != ch)
            throw ParseError(std::string("expected '") + ch + "' in colour '" + std::string(s) + "'", 1, at + 1);
        ++at;
    }

    static ColourId read(std::string_view s, std::size_t& at)
    {
        if (at >= s.size()) throw ParseError("truncated colour '" + std::string(s) + "'", 1, at + 1);
        if (s[at] == 'c') {
            ++at;
            return cls(read_number(s, at));
        }
        if (s[at] == '(') {
            ++at;
            ColourId inner = read(s, at);
            expect_char(s, at, ',');
            const std::uint32_t tag = read_number(s, at);
            expect_char(s, at, ')');
            return product(inner, tag);
        }
        if (s[at] == '{') {
            ++at;
            std::vector<ColourId> members;
            if (at < s.size() && s[at] == '}') {
                ++at;
                return set({});
            }
            for (;;) {
                members.push_back(read(s, at));
                if (at < s.size() && s[at] == ',') {
                    ++at;
                    continue;
                }
                expect_char(s, at, '}');
                break;
            }
            return set(std::move(members));
        }
        return base(read_number(s, at));
    }

    Tokens tok_;
};

struct ColourHash {
    std::size_t operator()(const ColourId& c) const noexcept { return c.hash(); }
};

/// Vertex set of a colouring: BinVertex values of a fixed width, optionally
/// bounded by an explicit count (absent means all 2^width values).
struct Universe {
    std::size_t width = 0;
    std::optional<std::uint64_t> count;

    static Universe of_size(std::uint64_t n)
    {
        const std::size_t w = n <= 1 ? 1 : static_cast<std::size_t>(std::bit_width(n - 1));
        return {w, n};
    }

    /// The {0,1}^m universe of a step-up over m base vertices.
    static Universe cube(std::size_t m)
    {
        Universe u{m, std::nullopt};
        if (m < 64) u.count = std::uint64_t{1} << m;
        return u;
    }

    BinVertex vertex(std::uint64_t i) const { return BinVertex::from_uint(i, width); }

    bool contains(const BinVertex& v) const
    {
        if (v.width() != width) return false;
        if (!count) return true;
        return v.fits_u64() && v.to_u64() < *count;
    }

    std::string size_string() const { return count ? std::to_string(*count) : "2^" + std::to_string(width); }
};

using Trace = std::vector<std::string>;
using Edge = std::vector<BinVertex>;
using EdgeView = std::span<const BinVertex>;

class ColouringImpl {
public:
    virtual ~ColouringImpl() = default;

    virtual std::size_t uniformity() const = 0;
    virtual Universe universe() const = 0;

    /// Colour of a strictly increasing edge of the right size inside the universe.
    virtual ColourId evaluate(EdgeView edge, Trace* trace) const = 0;

    /// First `count` colours of the declared palette in canonical order.
    virtual std::vector<ColourId> palette_prefix(std::size_t count) const = 0;

    /// Upper bound on the number of distinct colours (saturating).
    virtual std::uint64_t budget() const = 0;

    /// Representation tag, e.g. "tabulated" or "stepped-up-1".
    virtual std::string kind() const = 0;

    /// One line per construction stage, outermost last.
    virtual std::vector<std::string> provenance() const = 0;
};

/// Immutable, cheaply copyable handle to a colouring.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(std::shared_ptr<const ColouringImpl> impl) : impl_(std::move(impl)) {}

    explicit operator bool() const noexcept { return impl_ != nullptr; }

    std::size_t uniformity() const { return impl().uniformity(); }
    Universe universe() const { return impl().universe(); }
    std::uint64_t budget() const { return impl().budget(); }
    std::string kind() const { return impl().kind(); }
    std::vector<std::string> provenance() const { return impl().provenance(); }
    std::vector<ColourId> palette_prefix(std::size_t count) const { return impl().palette_prefix(count); }

    /// Checked evaluation: sorts the edge and validates size, distinctness and membership.
    ColourId colour(EdgeView edge, Trace* trace = nullptr) const
    {
        if (edge.size() != uniformity())
            throw PreconditionError("edge has " + std::to_string(edge.size()) + " vertices, colouring is " +
                                    std::to_string(uniformity()) + "-uniform");
        const Universe u = universe();
        Edge sorted(edge.begin(), edge.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (!u.contains(sorted[i]))
                throw PreconditionError("vertex " + sorted[i].to_string() + " (width " +
                                        std::to_string(sorted[i].width()) + ") is outside the universe of width " +
                                        std::to_string(u.width));
            if (i && sorted[i] == sorted[i - 1]) throw PreconditionError("edge repeats a vertex");
        }
        return impl().evaluate(sorted, trace);
    }

    /// Unchecked evaluation for hot loops; the edge must be sorted and valid.
    ColourId colour_unchecked(EdgeView edge, Trace* trace = nullptr) const { return impl().evaluate(edge, trace); }

    ColourId colour_of_ids(std::span<const std::uint64_t> ids, Trace* trace = nullptr) const
    {
        const Universe u = universe();
        Edge e;
        e.reserve(ids.size());
        for (std::uint64_t i : ids) e.push_back(u.vertex(i));
        return colour(e, trace);
    }

    template <class T>
    const T* as() const noexcept
    {
        return dynamic_cast<const T*>(impl_.get());
    }

    const ColouringImpl& impl() const
    {
        if (!impl_) throw PreconditionError("empty colouring handle");
        return *impl_;
    }

private:
    std::shared_ptr<const ColouringImpl> impl_;
};

/// Explicit table of base colours 1..q indexed by colex rank of the edge.
class TabulatedColouring final : public ColouringImpl {
public:
    TabulatedColouring(std::size_t k, std::uint64_t n, std::uint32_t q, std::vector<std::uint16_t> table,
                       std::string label = "tabulated", std::string origin = {})
        : k_(k), n_(n), q_(q), table_(std::move(table)), label_(std::move(label)), origin_(std::move(origin))
    {
        if (k < 1) throw PreconditionError("uniformity must be at least 1");
        if (q < 1 || q > 65535) throw PreconditionError("tabulated colourings need 1 <= q <= 65535");
        const std::uint64_t edges = binomial(n, k);
        if (edges == kSaturated || edges > (std::uint64_t{1} << 32))
            throw BudgetExceeded("tabulated colouring too large", static_cast<double>(edges), 4294967296.0);
        if (table_.size() != edges)
            throw PreconditionError("table has " + std::to_string(table_.size()) + " entries, expected C(" +
                                    std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(edges));
        for (auto c : table_)
            if (c < 1 || c > q) throw PreconditionError("table colour " + std::to_string(c) + " outside [1, q]");
    }

    std::size_t uniformity() const override { return k_; }
    Universe universe() const override { return Universe::of_size(n_); }

    ColourId evaluate(EdgeView edge, Trace* trace) const override
    {
        boost::container::small_vector<std::uint64_t, 8> ids;
        for (const auto& v : edge) ids.push_back(v.to_u64());
        const std::uint16_t c = table_[colex_rank(std::span<const std::uint64_t>(ids.data(), ids.size()))];
        if (trace) trace->push_back(label_ + ": table lookup gives " + std::to_string(c));
        return ColourId::base(c);
    }

    std::vector<ColourId> palette_prefix(std::size_t count) const override
    {
        if (count > q_) throw PreconditionError("palette has only " + std::to_string(q_) + " colours");
        std::vector<ColourId> out;
        for (std::uint32_t b = 1; b <= count; ++b) out.push_back(ColourId::base(b));
        return out;
    }

    std::uint64_t budget() const override { return q_; }
    std::string kind() const override { return label_; }

    std::vector<std::string> provenance() const override
    {
        std::string line = label_ + " K_" + std::to_string(n_) + "^(" + std::to_string(k_) + ") with " +
                           std::to_string(q_) + " colours";
        if (!origin_.empty()) line += " [" + origin_ + "]";
        return {line};
    }

    std::uint64_t vertex_count() const noexcept { return n_; }
    std::uint32_t colours() const noexcept { return q_; }
    const std::vector<std::uint16_t>& table() const noexcept { return table_; }

    std::uint16_t at_ids(std::span<const std::uint64_t> sorted_ids) const { return table_[colex_rank(sorted_ids)]; }

private:
    std::size_t k_;
    std::uint64_t n_;
    std::uint32_t q_;
    std::vector<std::uint16_t> table_;
    std::string label_;
    std::string origin_;
};

inline Colouring make_tabulated(std::size_t k, std::uint64_t n, std::uint32_t q, std::vector<std::uint16_t> table,
                                std::string label = "tabulated", std::string origin = {})
{
    return Colouring(std::make_shared<TabulatedColouring>(k, n, q, std::move(table), std::move(label),
                                                          std::move(origin)));
}

/// Tabulates any colouring on a small universe whose colours are base colours.
inline Colouring tabulate_from(std::size_t k, std::uint64_t n, std::uint32_t q,
                               const std::function<std::uint16_t(std::span<const std::size_t>)>& colour_of,
                               std::string label = "tabulated")
{
    std::vector<std::uint16_t> table(binomial(n, k));
    std::vector<std::uint64_t> ids(k);
    for_each_combination(n, k, [&](std::span<const std::size_t> c) {
        for (std::size_t i = 0; i < k; ++i) ids[i] = c[i];
        table[colex_rank(ids)] = colour_of(c);
    });
    return make_tabulated(k, n, q, std::move(table), std::move(label));
}

/// Uniformly random q-colouring of K_n^(k).
inline Colouring random_colouring(std::size_t k, std::uint64_t n, std::uint32_t q, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::uint16_t> table(binomial(n, k));
    for (auto& c : table) c = static_cast<std::uint16_t>(1 + rng.below(q));
    return make_tabulated(k, n, q, std::move(table), "random-seeded", "seed " + std::to_string(seed));
}

} // namespace ramsey
