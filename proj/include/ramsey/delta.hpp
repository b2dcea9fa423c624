#pragma once

// Vertices of {0,1}^m, the delta function, and delta-sequences.
//
// Coordinate i (1-based) is bit i-1 of the integer value, so the delta-order
// on vertices coincides with integer order.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ramsey/errors.hpp"
#include "ramsey/seqpat.hpp"

namespace ramsey {

class BinVertex {
public:
    using Words = boost::container::small_vector<std::uint64_t, 2>;

    BinVertex() = default;

    /// Zero vertex of the given width.
    explicit BinVertex(std::size_t width) : width_(width), words_(word_count(width), 0) {}

    static BinVertex from_uint(std::uint64_t value, std::size_t width)
    {
        BinVertex v(width);
        if (width < 64 && (value >> width) != 0)
            throw PreconditionError("value " + std::to_string(value) + " does not fit in " + std::to_string(width) +
                                    " bits");
        if (width == 0 && value != 0) throw PreconditionError("width 0 holds only the value 0");
        if (!v.words_.empty()) v.words_[0] = value;
        return v;
    }

    /// Parses a non-negative decimal integer.
    static BinVertex parse(std::string_view text, std::size_t width)
    {
        if (text.empty()) throw PreconditionError("empty vertex literal");
        BinVertex v(width);
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw PreconditionError("bad digit in vertex literal '" + std::string(text) + "'");
            if (!v.mul_add(10, static_cast<std::uint64_t>(ch - '0')))
                throw PreconditionError("vertex " + std::string(text) + " does not fit in " + std::to_string(width) +
                                        " bits");
        }
        return v;
    }

    std::size_t width() const noexcept { return width_; }
    const Words& words() const noexcept { return words_; }

    bool fits_u64() const noexcept
    {
        for (std::size_t i = 1; i < words_.size(); ++i)
            if (words_[i]) return false;
        return true;
    }

    std::uint64_t to_u64() const
    {
        if (!fits_u64()) throw PreconditionError("vertex exceeds 64 bits");
        return words_.empty() ? 0 : words_[0];
    }

    /// Coordinate i in [1, width].
    bool bit(std::size_t i) const
    {
        if (i < 1 || i > width_) throw PreconditionError("coordinate out of range");
        return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1u;
    }

    void set_bit(std::size_t i, bool value)
    {
        if (i < 1 || i > width_) throw PreconditionError("coordinate out of range");
        const std::uint64_t mask = std::uint64_t{1} << ((i - 1) % 64);
        if (value) words_[(i - 1) / 64] |= mask;
        else words_[(i - 1) / 64] &= ~mask;
    }

    std::string to_string() const
    {
        if (fits_u64()) return std::to_string(to_u64());
        Words w = words_;
        std::string digits;
        auto is_zero = [&] { return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; }); };
        while (!is_zero()) {
            unsigned __int128 rem = 0;
            for (std::size_t i = w.size(); i-- > 0;) {
                const unsigned __int128 cur = (rem << 64) | w[i];
                w[i] = static_cast<std::uint64_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
        }
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    friend bool operator==(const BinVertex& a, const BinVertex& b) noexcept
    {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

    /// Integer order; vertices of different widths order by width first.
    friend std::strong_ordering operator<=>(const BinVertex& a, const BinVertex& b) noexcept
    {
        if (a.width_ != b.width_) return a.width_ <=> b.width_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        return std::strong_ordering::equal;
    }

private:
    static std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

    // this = this * m + a; false on overflow past width.
    bool mul_add(std::uint64_t m, std::uint64_t a)
    {
        unsigned __int128 carry = a;
        for (auto& w : words_) {
            const unsigned __int128 cur = static_cast<unsigned __int128>(w) * m + carry;
            w = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry != 0) return false;
        if (width_ % 64 != 0 && !words_.empty() && (words_.back() >> (width_ % 64)) != 0) return false;
        return !(width_ == 0 && a != 0);
    }

    std::size_t width_ = 0;
    Words words_;
};

/// Highest coordinate where v and w differ (1-based).
inline std::size_t delta(const BinVertex& v, const BinVertex& w)
{
    if (v.width() != w.width())
        throw PreconditionError("delta of vertices with widths " + std::to_string(v.width()) + " and " +
                                std::to_string(w.width()));
    const auto& a = v.words();
    const auto& b = w.words();
    for (std::size_t i = a.size(); i-- > 0;) {
        const std::uint64_t x = a[i] ^ b[i];
        if (x) return i * 64 + static_cast<std::size_t>(std::bit_width(x));
    }
    throw PreconditionError("delta of a vertex with itself");
}

struct DeltaSeq {
    std::vector<BinVertex> hosts;  // strictly increasing
    Sequence deltas;               // deltas[i] = delta(hosts[i], hosts[i + 1])
};

inline DeltaSeq delta_sequence(std::vector<BinVertex> vs)
{
    DeltaSeq ds;
    ds.deltas.reserve(vs.empty() ? 0 : vs.size() - 1);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!(vs[i] < vs[i + 1]))
            throw PreconditionError("delta_sequence needs strictly increasing vertices; position " +
                                    std::to_string(i + 2) + " breaks the order");
        ds.deltas.push_back(static_cast<Value>(delta(vs[i], vs[i + 1])));
    }
    ds.hosts = std::move(vs);
    return ds;
}

/// Deltas of an increasing vertex list into a caller-owned buffer (no checks).
template <class Out>
void delta_values(std::span<const BinVertex> vs, Out& out)
{
    out.clear();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) out.push_back(static_cast<Value>(delta(vs[i], vs[i + 1])));
}

/// Checks the (unique) property on the delta values and the (max) property
/// delta(v_a, v_b) = max of the deltas in between, for every pair of hosts.
/// With no hosts only the unique-maximum half is checked.
inline bool check_unique_and_max(const std::vector<BinVertex>& hosts, SequenceView deltas)
{
    if (!unique_maximum_property(deltas)) return false;
    if (hosts.empty()) return true;
    if (hosts.size() != deltas.size() + 1) return false;
    for (std::size_t a = 0; a < hosts.size(); ++a) {
        Value running = 0;
        for (std::size_t b = a + 1; b < hosts.size(); ++b) {
            running = std::max(running, deltas[b - 1]);
            if (static_cast<Value>(delta(hosts[a], hosts[b])) != running) return false;
        }
    }
    return true;
}

inline bool check_unique_and_max(const DeltaSeq& ds) { return check_unique_and_max(ds.hosts, ds.deltas); }

/// Host vertices u_1 < ... < u_{t+1} whose consecutive deltas are exactly the
/// selected deltas (delta_{i_1}, ..., delta_{i_t}).
inline std::vector<BinVertex> realize_max_induced(const DeltaSeq& ds, const IndexSet& ix)
{
    require_index_set(ix, ds.deltas.size());
    if (!is_max_induced(ds.deltas, ix)) throw PreconditionError("index set is not max-induced in the delta-sequence");
    std::vector<BinVertex> out;
    if (ix.empty()) return out;
    const auto& v = ds.hosts;   // v[i - 1] is v_i
    const auto& d = ds.deltas;  // d[i - 1] is delta_i
    out.push_back(v[ix[0] - 1]);
    for (std::size_t s = 1; s < ix.size(); ++s)
        out.push_back(d[ix[s - 1] - 1] < d[ix[s] - 1] ? v[ix[s - 1]] : v[ix[s] - 1]);
    out.push_back(v[ix.back()]);

    for (std::size_t s = 0; s < ix.size(); ++s)
        if (!(out[s] < out[s + 1]) || static_cast<Value>(delta(out[s], out[s + 1])) != d[ix[s] - 1])
            throw Error("max-induced realization failed; the host list is not a genuine delta-sequence");
    return out;
}

/// Consecutive host pairs (v_{i_s}, v_{i_s + 1}) for a separated index set.
inline std::vector<BinVertex> realize_separated(const DeltaSeq& ds, const IndexSet& ix)
{
    require_index_set(ix, ds.deltas.size());
    if (!is_separated(ix)) throw PreconditionError("index set is not separated");
    std::vector<BinVertex> out;
    for (std::size_t i : ix) {
        out.push_back(ds.hosts[i - 1]);
        out.push_back(ds.hosts[i]);
    }
    return out;
}

} // namespace ramsey
