#pragma once

// Sequences, order patterns, and the max-induced / separated subsequence machinery.
//
// Index sets are 1-based throughout this header: an IndexSet {1, 3} selects the
// first and third element of its host sequence.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

using Value = std::int64_t;
using Sequence = std::vector<Value>;
using SequenceView = std::span<const Value>;

/// Strictly increasing 1-based positions into a host sequence.
using IndexSet = std::vector<std::size_t>;

/// Order-equivalence class of a sequence, stored as dense ranks starting at 1
/// (ties share a rank). Equal patterns have equal rank vectors.
class Pattern {
public:
    Pattern() = default;

    /// Throws PreconditionError unless ranks are dense and start at 1.
    explicit Pattern(std::vector<int> ranks) : ranks_(std::move(ranks))
    {
        int top = 0;
        for (int r : ranks_) top = std::max(top, r);
        std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
        for (int r : ranks_) {
            if (r < 1) throw PreconditionError("pattern ranks must be positive");
            seen[static_cast<std::size_t>(r)] = true;
        }
        for (int r = 1; r <= top; ++r)
            if (!seen[static_cast<std::size_t>(r)])
                throw PreconditionError("pattern ranks must be dense; missing rank " + std::to_string(r));
    }

    Pattern(std::initializer_list<int> ranks) : Pattern(std::vector<int>(ranks)) {}

    std::size_t size() const noexcept { return ranks_.size(); }
    bool empty() const noexcept { return ranks_.empty(); }
    int operator[](std::size_t i) const { return ranks_[i]; }
    const std::vector<int>& ranks() const noexcept { return ranks_; }

    /// Number of distinct values.
    int distinct() const noexcept
    {
        int top = 0;
        for (int r : ranks_) top = std::max(top, r);
        return top;
    }

    bool is_permutation() const noexcept { return distinct() == static_cast<int>(size()); }

    Sequence as_sequence() const { return Sequence(ranks_.begin(), ranks_.end()); }

    /// Sub-pattern on positions [first, last), re-ranked.
    Pattern slice(std::size_t first, std::size_t last) const;

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < ranks_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(ranks_[i]);
        }
        return out + ")";
    }

    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<int> ranks_;
};

inline Pattern pattern_of(SequenceView s)
{
    Sequence sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks;
    ranks.reserve(s.size());
    for (Value v : s)
        ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return Pattern(std::move(ranks));
}

inline Pattern Pattern::slice(std::size_t first, std::size_t last) const
{
    Sequence part(ranks_.begin() + static_cast<std::ptrdiff_t>(first),
                  ranks_.begin() + static_cast<std::ptrdiff_t>(last));
    return pattern_of(part);
}

/// Number of distinct values in s.
inline std::size_t distinct_values(SequenceView s)
{
    Sequence sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

inline bool is_valid_index_set(const IndexSet& ix, std::size_t n) noexcept
{
    for (std::size_t j = 0; j < ix.size(); ++j) {
        if (ix[j] < 1 || ix[j] > n) return false;
        if (j > 0 && ix[j] <= ix[j - 1]) return false;
    }
    return true;
}

inline void require_index_set(const IndexSet& ix, std::size_t n)
{
    if (!is_valid_index_set(ix, n))
        throw PreconditionError("index set must be strictly increasing within [1, " + std::to_string(n) + "]");
}

inline Sequence values_at(SequenceView s, const IndexSet& ix)
{
    require_index_set(ix, s.size());
    Sequence out;
    out.reserve(ix.size());
    for (std::size_t i : ix) out.push_back(s[i - 1]);
    return out;
}

enum class Monotone { non_strict, strict };

inline bool is_homogeneous(SequenceView s, Monotone mode = Monotone::non_strict) noexcept
{
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (mode == Monotone::strict) {
            up = up && s[i - 1] < s[i];
            down = down && s[i - 1] > s[i];
        } else {
            up = up && s[i - 1] <= s[i];
            down = down && s[i - 1] >= s[i];
        }
    }
    return up || down;
}

/// True iff for each consecutive pair of chosen positions, the maximum over the
/// closed gap between them is attained at one of the two endpoints.
inline bool is_max_induced(SequenceView s, const IndexSet& ix)
{
    require_index_set(ix, s.size());
    for (std::size_t j = 0; j + 1 < ix.size(); ++j) {
        const std::size_t a = ix[j] - 1;
        const std::size_t b = ix[j + 1] - 1;
        const Value ends = std::max(s[a], s[b]);
        for (std::size_t i = a + 1; i < b; ++i)
            if (s[i] > ends) return false;
    }
    return true;
}

inline bool is_separated(const IndexSet& ix) noexcept
{
    for (std::size_t j = 1; j < ix.size(); ++j)
        if (ix[j] <= ix[j - 1] + 1) return false;
    return true;
}

namespace detail {

inline int sign(Value a, Value b) noexcept { return (a > b) - (a < b); }

enum class Gap { any, max_induced, separated };

// Depth-first search over increasing position tuples, pruning any prefix whose
// relative order already disagrees with the target pattern. The first hit is the
// lexicographically least witness.
class PatternSearch {
public:
    PatternSearch(SequenceView s, const Pattern& p, Gap gap) : s_(s), p_(p), gap_(gap) {}

    std::optional<IndexSet> run()
    {
        if (p_.empty()) return IndexSet{};
        chosen_.clear();
        for (std::size_t i = 0; i < s_.size(); ++i) {
            chosen_.push_back(i);
            if (extend()) return to_index_set();
            chosen_.pop_back();
        }
        return std::nullopt;
    }

private:
    bool consistent(std::size_t j) const noexcept
    {
        const std::size_t d = chosen_.size();
        for (std::size_t e = 0; e < d; ++e)
            if (sign(s_[j], s_[chosen_[e]]) != sign(p_[d], p_[e])) return false;
        return true;
    }

    bool extend()
    {
        if (chosen_.size() == p_.size()) return true;
        const std::size_t i = chosen_.back();
        Value interior = 0;
        bool has_interior = false;
        const std::size_t start = (gap_ == Gap::separated) ? i + 2 : i + 1;
        for (std::size_t j = i + 1; j < s_.size(); ++j) {
            if (j >= start) {
                bool ok = true;
                if (gap_ == Gap::max_induced && has_interior)
                    ok = interior <= std::max(s_[i], s_[j]);
                if (ok && consistent(j)) {
                    chosen_.push_back(j);
                    if (extend()) return true;
                    chosen_.pop_back();
                }
            }
            interior = has_interior ? std::max(interior, s_[j]) : s_[j];
            has_interior = true;
        }
        return false;
    }

    IndexSet to_index_set() const
    {
        IndexSet out;
        for (std::size_t c : chosen_) out.push_back(c + 1);
        return out;
    }

    SequenceView s_;
    const Pattern& p_;
    Gap gap_;
    std::vector<std::size_t> chosen_;
};

} // namespace detail

/// Lexicographically least subsequence of s with pattern p, if any.
inline std::optional<IndexSet> contains_pattern(SequenceView s, const Pattern& p)
{
    return detail::PatternSearch(s, p, detail::Gap::any).run();
}

/// Lexicographically least max-induced subsequence of s with pattern p, if any.
inline std::optional<IndexSet> contains_max_induced(SequenceView s, const Pattern& p)
{
    return detail::PatternSearch(s, p, detail::Gap::max_induced).run();
}

/// Lexicographically least separated subsequence of s with pattern sigma.
inline std::optional<IndexSet> contains_separated_permutation(SequenceView s, const Pattern& sigma)
{
    if (!sigma.is_permutation()) throw PreconditionError("separated search needs a permutation pattern");
    return detail::PatternSearch(s, sigma, detail::Gap::separated).run();
}

struct HomogeneousResult {
    std::size_t length = 0;
    IndexSet indices;
    bool exact = true;
};

/// Longest max-induced subsequence that is monotone in one fixed direction.
inline HomogeneousResult longest_directed_max_induced(SequenceView s, bool increasing,
                                                      Monotone mode = Monotone::non_strict)
{
    const std::size_t n = s.size();
    HomogeneousResult best;
    if (n == 0) return best;
    std::vector<std::size_t> len(n, 1);
    std::vector<std::size_t> prev(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Value interior = 0;
        bool has_interior = false;
        for (std::size_t i = j; i-- > 0;) {
            const Value lo = increasing ? s[i] : s[j];
            const Value hi = increasing ? s[j] : s[i];
            const bool ordered = mode == Monotone::strict ? lo < hi : lo <= hi;
            const bool gap_ok = !has_interior || interior <= std::max(s[i], s[j]);
            if (ordered && gap_ok && len[i] + 1 > len[j]) {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
            interior = has_interior ? std::max(interior, s[i]) : s[i];
            has_interior = true;
        }
    }
    const auto end = static_cast<std::size_t>(std::max_element(len.begin(), len.end()) - len.begin());
    for (std::size_t at = end; at != n; at = prev[at]) best.indices.push_back(at + 1);
    std::reverse(best.indices.begin(), best.indices.end());
    best.length = len[end];
    return best;
}

/// Longest monotone max-induced subsequence.
///
/// Both monotonicity and max-inducedness only constrain consecutive chosen pairs,
/// so the optimum is a longest path in the DAG of compatible pairs; the O(n^2)
/// dynamic programme is exact for every length.
inline HomogeneousResult longest_homogeneous_max_induced(SequenceView s, Monotone mode = Monotone::non_strict)
{
    auto up = longest_directed_max_induced(s, true, mode);
    auto down = longest_directed_max_induced(s, false, mode);
    return down.length > up.length ? down : up;
}

namespace detail {

// Walks every interval [a, b] with m the first position of its maximum and hands
// (a, m, b, left-part stats, right-part stats) to the predicate.
template <class Check>
bool all_intervals(const Pattern& p, Check check)
{
    const std::size_t k = p.size();
    for (std::size_t a = 0; a < k; ++a) {
        std::size_t m = a;
        int left_min = 0, left_max = 0;    // over [a, m)
        int right_min = 0, right_max = 0;  // over (m, b]
        bool left_empty = true, right_empty = true;
        int prefix_min = p[a], prefix_max = p[a];  // over [a, b)
        for (std::size_t b = a; b < k; ++b) {
            if (b > a) {
                if (p[b] > p[m]) {
                    m = b;
                    left_empty = false;
                    left_min = prefix_min;
                    left_max = prefix_max;
                    right_empty = true;
                } else if (right_empty) {
                    right_min = right_max = p[b];
                    right_empty = false;
                } else {
                    right_min = std::min(right_min, p[b]);
                    right_max = std::max(right_max, p[b]);
                }
                prefix_min = std::min(prefix_min, p[b]);
                prefix_max = std::max(prefix_max, p[b]);
            }
            if (!left_empty && !right_empty && !check(left_min, left_max, right_min, right_max)) return false;
        }
    }
    return true;
}

} // namespace detail

/// Every interval: everything left of its maximum is >= everything right of it.
inline bool has_left_property(const Pattern& p)
{
    return detail::all_intervals(p, [](int lmin, int, int, int rmax) { return lmin >= rmax; });
}

/// Every interval: everything left of its maximum is < everything right of it.
inline bool has_right_property(const Pattern& p)
{
    return detail::all_intervals(p, [](int, int lmax, int rmin, int) { return lmax < rmin; });
}

/// Decreasing up to some position, increasing afterwards.
inline bool has_unique_local_minimum(const Pattern& p)
{
    if (!p.is_permutation()) throw PreconditionError("unique local minimum is defined for permutations only");
    std::size_t i = 1;
    while (i < p.size() && p[i] < p[i - 1]) ++i;
    while (i < p.size() && p[i] > p[i - 1]) ++i;
    return i >= p.size();
}

inline constexpr std::size_t kMaxEnumeratedPermutationLength = 10;

/// All permutations of [k] in lexicographic order.
inline std::vector<Pattern> all_permutations(std::size_t k)
{
    if (k > kMaxEnumeratedPermutationLength)
        throw PreconditionError("permutation enumeration limited to k <= " +
                                std::to_string(kMaxEnumeratedPermutationLength));
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i) + 1;
    std::vector<Pattern> out;
    do {
        out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::vector<Pattern> enumerate_right_property_perms(std::size_t k)
{
    std::vector<Pattern> out;
    for (auto& p : all_permutations(k))
        if (has_right_property(p)) out.push_back(std::move(p));
    return out;
}

inline std::vector<Pattern> enumerate_left_property_perms(std::size_t k)
{
    std::vector<Pattern> out;
    for (auto& p : all_permutations(k))
        if (has_left_property(p)) out.push_back(std::move(p));
    return out;
}

/// All patterns (weak orderings) of length k in lexicographic order of rank vectors.
inline std::vector<Pattern> enumerate_patterns(std::size_t k)
{
    if (k > 8) throw PreconditionError("pattern enumeration limited to k <= 8");
    std::vector<Pattern> out;
    std::vector<int> ranks(k);
    // used[r] counts positions holding rank r; a prefix is viable if the missing
    // ranks below its maximum can still be placed.
    std::vector<int> used(k + 2, 0);
    auto rec = [&](auto&& self, std::size_t pos, int top, int missing) -> void {
        if (pos == k) {
            if (missing == 0) out.emplace_back(ranks);
            return;
        }
        const std::size_t remaining = k - pos;
        for (int r = 1; r <= static_cast<int>(k); ++r) {
            const int new_top = std::max(top, r);
            int new_missing = missing;
            if (r > top) new_missing += r - top - 1;
            else if (used[static_cast<std::size_t>(r)] == 0) --new_missing;
            if (static_cast<std::size_t>(new_missing) > remaining - 1) continue;
            ranks[pos] = r;
            ++used[static_cast<std::size_t>(r)];
            self(self, pos + 1, new_top, new_missing);
            --used[static_cast<std::size_t>(r)];
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

/// The permutation S_k of length 2^{k+1} - 1 that avoids a max-induced (2,3,1)
/// and every max-induced homogeneous subsequence longer than k + 1.
inline Sequence gen_sk(std::size_t k)
{
    if (k < 1) throw PreconditionError("gen_sk needs k >= 1");
    if (k > 40) throw PreconditionError("gen_sk: length 2^(k+1)-1 too large");
    Sequence s{1, 3, 2};
    for (std::size_t level = 2; level <= k; ++level) {
        const Value half = Value{1} << level;  // 2^level
        Sequence next;
        next.reserve(static_cast<std::size_t>(2 * half - 1));
        next.insert(next.end(), s.begin(), s.end());
        next.push_back(2 * half - 1);
        for (Value a : s) next.push_back(a + half - 1);
        s = std::move(next);
    }
    return s;
}

/// First interval (1-based, inclusive) whose maximum is attained twice, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> unique_maximum_violation(SequenceView s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        Value interior = 0;
        bool has_interior = false;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (has_interior && interior > s[i]) break;
            if (s[j] == s[i]) return std::pair{i + 1, j + 1};
            interior = has_interior ? std::max(interior, s[j]) : s[j];
            has_interior = true;
        }
    }
    return std::nullopt;
}

/// Every interval attains its maximum exactly once.
inline bool unique_maximum_property(SequenceView s) { return !unique_maximum_violation(s).has_value(); }

// ---------------------------------------------------------------------------
// Left / right / homogeneous extraction

struct Witness {
    enum class Kind { left, right, homogeneous };
    Kind kind = Kind::homogeneous;
    IndexSet indices;
    Sequence values;
    Pattern pattern;
};

inline const char* to_string(Witness::Kind k)
{
    switch (k) {
    case Witness::Kind::left: return "left";
    case Witness::Kind::right: return "right";
    case Witness::Kind::homogeneous: return "homogeneous";
    }
    return "?";
}

struct ExtractOptions {
    /// The exponent at total pattern length t is base^{-t}; 4 reproduces the
    /// standard bound. Smaller bases raise the homogeneous target so the
    /// recursion is exercised on short sequences.
    double exponent_base = 4.0;
};

inline double extraction_epsilon(std::size_t total_length, const ExtractOptions& opt = {})
{
    return std::pow(opt.exponent_base, -static_cast<double>(total_length));
}

/// Length the homogeneous branch promises: |s|^eps / 2.
inline double extraction_length_bound(std::size_t n, double eps) { return std::pow(static_cast<double>(n), eps) / 2.0; }

namespace detail {

class Extractor {
public:
    enum class Found { first, second, homogeneous };

    struct Result {
        Found found;
        std::vector<std::size_t> positions;  // 0-based positions in the host
    };

    Extractor(SequenceView s, ExtractOptions opt) : s_(s), opt_(opt) {}

    // Looks for a max-induced copy of `first` (a left-property piece), of
    // `second` (a right-property piece), or a long homogeneous run, inside the
    // subsequence of the host at `pos`. Relative to the host, every max-induced
    // subsequence of `pos` is max-induced.
    Result solve(const std::vector<std::size_t>& pos, const Pattern& left, const Pattern& right) const
    {
        if (left.empty()) return {Found::first, {}};
        if (right.empty()) return {Found::second, {}};
        if (pos.empty()) return {Found::homogeneous, {}};

        if (left.size() <= 2 || right.size() <= 2) return solve_small(pos, left, right);

        const std::size_t n = pos.size();
        const double eps = extraction_epsilon(left.size() + right.size(), opt_);
        const double target = extraction_length_bound(n, eps);
        const double window = std::pow(static_cast<double>(n), 1.0 - eps);
        auto a = [&](std::size_t i) { return s_[pos[i]]; };

        std::vector<std::size_t> best;  // longest homogeneous candidate, local positions
        auto offer = [&](std::vector<std::size_t> cand) -> bool {
            if (cand.size() > best.size()) best = std::move(cand);
            return static_cast<double>(best.size()) >= target;
        };
        auto homogeneous = [&] { return Result{Found::homogeneous, to_host(pos, best)}; };

        // Peel maxima that sit close to either end.
        std::vector<std::size_t> fl, fr;
        std::ptrdiff_t lo = 0, hi = static_cast<std::ptrdiff_t>(n) - 1;
        std::ptrdiff_t lbound = -1, rbound = static_cast<std::ptrdiff_t>(n);
        std::ptrdiff_t top = -1;
        while (lo <= hi) {
            std::ptrdiff_t j = lo;
            for (std::ptrdiff_t i = lo + 1; i <= hi; ++i)
                if (a(static_cast<std::size_t>(i)) > a(static_cast<std::size_t>(j))) j = i;
            if (static_cast<double>(j - lbound) < window) {
                fl.push_back(static_cast<std::size_t>(j));
                lbound = j;
                lo = j + 1;
            } else if (static_cast<double>(rbound - j) < window) {
                fr.push_back(static_cast<std::size_t>(j));
                rbound = j;
                hi = j - 1;
            } else {
                top = j;
                break;
            }
        }
        std::reverse(fr.begin(), fr.end());
        if (offer(fl) || offer(fr) || top < 0) return homogeneous();

        const auto jt = static_cast<std::size_t>(top);
        const Value peak = a(jt);
        std::vector<std::size_t> fm;
        for (auto i = static_cast<std::size_t>(lo); i <= static_cast<std::size_t>(hi); ++i)
            if (a(i) == peak) fm.push_back(i);
        if (offer(fm)) return homogeneous();

        // M: the largest values of S', closed under ties so that everything outside
        // M is strictly smaller than everything inside.
        std::vector<Value> vals;
        for (auto i = static_cast<std::size_t>(lo); i <= static_cast<std::size_t>(hi); ++i) vals.push_back(a(i));
        std::sort(vals.begin(), vals.end(), std::greater<>());
        const auto msize = std::min(vals.size(),
                                    static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), (1.0 - eps) / 2.0))));
        const Value threshold = vals[std::max<std::size_t>(msize, 1) - 1];
        auto in_m = [&](std::size_t i) { return a(i) >= threshold; };

        std::vector<std::size_t> m_left, m_right;
        for (auto i = static_cast<std::size_t>(lo); i < jt; ++i)
            if (in_m(i)) m_left.push_back(i);
        for (auto i = jt + 1; i <= static_cast<std::size_t>(hi); ++i)
            if (in_m(i)) m_right.push_back(i);

        const bool high_on_left = m_left.size() >= m_right.size();
        const std::size_t left_lo = static_cast<std::size_t>(lo), left_hi = jt;         // [left_lo, left_hi)
        const std::size_t right_lo = jt + 1, right_hi = static_cast<std::size_t>(hi) + 1;  // [right_lo, right_hi)

        // High side: a stretch free of F_m holding many M elements.
        std::vector<std::size_t> high;
        {
            const std::size_t from = high_on_left ? left_lo : right_lo;
            const std::size_t to = high_on_left ? left_hi : right_hi;
            high = best_gap_members(from, to, [&](std::size_t i) { return a(i) == peak; }, in_m);
        }
        // Low side: an interval free of M, then free of its own maxima.
        std::vector<std::size_t> low;
        {
            const std::size_t from = high_on_left ? right_lo : left_lo;
            const std::size_t to = high_on_left ? right_hi : left_hi;
            auto [ilo, ihi] = longest_gap(from, to, in_m);
            if (ilo < ihi) {
                Value imax = a(ilo);
                for (std::size_t i = ilo; i < ihi; ++i) imax = std::max(imax, a(i));
                std::vector<std::size_t> im;
                for (std::size_t i = ilo; i < ihi; ++i)
                    if (a(i) == imax) im.push_back(i);
                if (offer(im)) return homogeneous();
                auto [blo, bhi] = longest_gap(ilo, ihi, [&](std::size_t i) { return a(i) == imax; });
                for (std::size_t i = blo; i < bhi; ++i) low.push_back(i);
            }
        }

        // Split the pattern that owns this orientation at its maximum.
        const Pattern& split = high_on_left ? left : right;
        const std::size_t at = static_cast<std::size_t>(
            std::max_element(split.ranks().begin(), split.ranks().end()) - split.ranks().begin());
        const Pattern before = split.slice(0, at);
        const Pattern after = split.slice(at + 1, split.size());
        const Pattern& high_piece = high_on_left ? before : after;
        const Pattern& low_piece = high_on_left ? after : before;

        auto recurse = [&](const std::vector<std::size_t>& local, const Pattern& piece) {
            const auto host = to_host(pos, local);
            return high_on_left ? solve(host, piece, right) : solve(host, left, piece);
        };
        const Found piece_found = high_on_left ? Found::first : Found::second;
        const Found other_found = high_on_left ? Found::second : Found::first;

        const Result rh = recurse(high, high_piece);
        if (rh.found == other_found) return rh;
        const Result rl = recurse(low, low_piece);
        if (rl.found == other_found) return rl;

        if (rh.found == piece_found && rl.found == piece_found) {
            std::vector<std::size_t> joined;
            const auto& first_part = high_on_left ? rh.positions : rl.positions;
            const auto& last_part = high_on_left ? rl.positions : rh.positions;
            joined.insert(joined.end(), first_part.begin(), first_part.end());
            joined.push_back(pos[jt]);
            joined.insert(joined.end(), last_part.begin(), last_part.end());
            return {piece_found, std::move(joined)};
        }

        // The recursion fell short of its bound (small n). Keep the longest
        // homogeneous run seen anywhere; it is valid, just shorter than promised.
        std::vector<std::size_t> host_best = to_host(pos, best);
        for (const Result* r : {&rh, &rl})
            if (r->found == Found::homogeneous && r->positions.size() > host_best.size()) host_best = r->positions;
        return {Found::homogeneous, std::move(host_best)};
    }

private:
    static std::vector<std::size_t> to_host(const std::vector<std::size_t>& pos, const std::vector<std::size_t>& local)
    {
        std::vector<std::size_t> out;
        out.reserve(local.size());
        for (std::size_t i : local) out.push_back(pos[i]);
        return out;
    }

    // Longest run [a, b) inside [from, to) containing no blocked position; the
    // first one wins ties.
    template <class Blocked>
    static std::pair<std::size_t, std::size_t> longest_gap(std::size_t from, std::size_t to, Blocked blocked)
    {
        std::pair<std::size_t, std::size_t> best{from, from};
        std::size_t start = from;
        for (std::size_t i = from; i <= to; ++i) {
            if (i == to || blocked(i)) {
                if (i - start > best.second - best.first) best = {start, i};
                start = i + 1;
            }
        }
        return best;
    }

    // Among the runs of [from, to) separated by blocked positions, the members of
    // the run holding the most `wanted` positions.
    template <class Blocked, class Wanted>
    static std::vector<std::size_t> best_gap_members(std::size_t from, std::size_t to, Blocked blocked, Wanted wanted)
    {
        std::vector<std::size_t> best, cur;
        for (std::size_t i = from; i <= to; ++i) {
            if (i == to || blocked(i)) {
                if (cur.size() > best.size()) best = cur;
                cur.clear();
            } else if (wanted(i)) {
                cur.push_back(i);
            }
        }
        return best;
    }

    Result solve_small(const std::vector<std::size_t>& pos, const Pattern& left, const Pattern& right) const
    {
        auto find = [&](const Pattern& p) -> std::optional<std::vector<std::size_t>> {
            if (p.size() == 1) return std::vector<std::size_t>{pos[0]};
            for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
                const int want = p[1] > p[0] ? 1 : -1;
                if (sign(s_[pos[i + 1]], s_[pos[i]]) == want) return std::vector<std::size_t>{pos[i], pos[i + 1]};
            }
            return std::nullopt;
        };
        if (left.size() <= 2)
            if (auto hit = find(left)) return {Found::first, std::move(*hit)};
        if (right.size() <= 2)
            if (auto hit = find(right)) return {Found::second, std::move(*hit)};
        // A missing (1,2) or (2,1) between neighbours makes the whole run monotone.
        return {Found::homogeneous, pos};
    }

    SequenceView s_;
    ExtractOptions opt_;
};

} // namespace detail

/// Returns a max-induced copy of L, a max-induced copy of R, or a homogeneous
/// max-induced subsequence. L must be a permutation with the left property and R
/// a permutation with the right property. For |s| >= 2^{1/eps} the homogeneous
/// branch has length at least |s|^eps / 2 with eps = 4^{-(|L|+|R|)}.
inline Witness find_left_right_or_homogeneous(SequenceView s, const Pattern& left, const Pattern& right,
                                              const ExtractOptions& opt = {})
{
    if (left.empty() || !left.is_permutation() || !has_left_property(left))
        throw PreconditionError("L must be a permutation with the left property, got " + left.to_string());
    if (right.empty() || !right.is_permutation() || !has_right_property(right))
        throw PreconditionError("R must be a permutation with the right property, got " + right.to_string());
    if (!(opt.exponent_base > 1.0)) throw PreconditionError("exponent base must exceed 1");

    std::vector<std::size_t> all(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) all[i] = i;
    const auto r = detail::Extractor(s, opt).solve(all, left, right);

    auto positions = r.positions;
    if (r.found == detail::Extractor::Found::homogeneous) {
        // Any homogeneous max-induced run is an acceptable answer; report the longest.
        auto longest = longest_homogeneous_max_induced(s);
        if (longest.length > positions.size()) {
            positions.clear();
            for (std::size_t i : longest.indices) positions.push_back(i - 1);
        }
    }

    Witness w;
    switch (r.found) {
    case detail::Extractor::Found::first: w.kind = Witness::Kind::left; break;
    case detail::Extractor::Found::second: w.kind = Witness::Kind::right; break;
    case detail::Extractor::Found::homogeneous: w.kind = Witness::Kind::homogeneous; break;
    }
    for (std::size_t p : positions) {
        w.indices.push_back(p + 1);
        w.values.push_back(s[p]);
    }
    w.pattern = pattern_of(w.values);
    return w;
}

// ---------------------------------------------------------------------------
// Separated subsequences

/// Pigeonhole chain of constant subsequences. Level 0 is the most frequent value
/// of A; level i + 1 is the most frequent value among the gap maxima of level i.
struct InterlacingChain {
    std::vector<IndexSet> levels;  // 1-based positions, increasing
    std::vector<Value> values;     // the constant value on each level, increasing
};

struct SeparatedRealization {
    InterlacingChain chain;
    std::map<Pattern, IndexSet> realizations;  // every permutation of [k]
};

inline InterlacingChain build_interlacing_chain(SequenceView a, std::size_t k)
{
    InterlacingChain chain;
    auto most_frequent = [&](const std::vector<std::size_t>& positions) {
        std::map<Value, std::size_t> count;
        for (std::size_t p : positions) ++count[a[p]];
        Value pick = 0;
        std::size_t best = 0;
        for (const auto& [v, c] : count)
            if (c > best) best = c, pick = v;
        IndexSet level;
        for (std::size_t p : positions)
            if (a[p] == pick) level.push_back(p + 1);
        return std::pair{pick, level};
    };

    std::vector<std::size_t> candidates(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) candidates[i] = i;
    for (std::size_t level = 0; level < k; ++level) {
        if (candidates.empty())
            throw PreconditionError("interlacing chain stops at level " + std::to_string(level + 1));
        auto [value, positions] = most_frequent(candidates);
        chain.values.push_back(value);
        chain.levels.push_back(positions);
        candidates.clear();
        for (std::size_t j = 0; j + 1 < positions.size(); ++j) {
            std::size_t at = positions[j] - 1;
            for (std::size_t i = positions[j]; i < positions[j + 1]; ++i)
                if (a[i] > a[at]) at = i;
            candidates.push_back(at);
        }
    }
    return chain;
}

/// Realizes every permutation of [k] as a separated subsequence of A using the
/// pigeonhole chain. Requires the unique maximum property and ||A|| < |A|^{1/(k+1)}.
inline SeparatedRealization separated_interlacing(SequenceView a, std::size_t k)
{
    if (k < 1) throw PreconditionError("separated_interlacing needs k >= 1");
    if (auto bad = unique_maximum_violation(a))
        throw PreconditionError("unique maximum property fails on interval [" + std::to_string(bad->first) + ", " +
                                std::to_string(bad->second) + "]");
    const std::size_t d = distinct_values(a);
    std::uint64_t power = 1;
    for (std::size_t i = 0; i <= k; ++i) power = sat_mul(power, d);
    if (power >= a.size())
        throw PreconditionError("distinct values ||A|| = " + std::to_string(d) + " is not below |A|^{1/(k+1)} = " +
                                std::to_string(std::pow(static_cast<double>(a.size()), 1.0 / static_cast<double>(k + 1))));

    SeparatedRealization out;
    out.chain = build_interlacing_chain(a, k);
    const auto& levels = out.chain.levels;

    for (const Pattern& sigma : all_permutations(k)) {
        IndexSet pick;
        auto rec = [&](auto&& self, std::size_t j, std::size_t min_pos) -> bool {
            if (j == k) return true;
            const IndexSet& level = levels[static_cast<std::size_t>(sigma[j]) - 1];
            for (auto it = std::lower_bound(level.begin(), level.end(), min_pos); it != level.end(); ++it) {
                pick.push_back(*it);
                if (self(self, j + 1, *it + 2)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (!rec(rec, 0, 1)) throw Error("chain admits no separated realization of " + sigma.to_string());
        out.realizations.emplace(sigma, std::move(pick));
    }
    return out;
}

/// Re-checks an extraction witness against its sequence: indices, values,
/// max-inducedness and the claimed pattern.
inline bool validate_witness(SequenceView s, const Pattern& left, const Pattern& right, const Witness& w,
                             std::string* why = nullptr)
{
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (!is_valid_index_set(w.indices, s.size())) return fail("index set is not increasing within [1, |s|]");
    if (values_at(s, w.indices) != w.values) return fail("recorded values differ from the sequence");
    if (pattern_of(w.values) != w.pattern) return fail("recorded pattern differs from the values");
    if (!is_max_induced(s, w.indices)) return fail("subsequence is not max-induced");
    switch (w.kind) {
    case Witness::Kind::left:
        if (w.pattern != left) return fail("pattern " + w.pattern.to_string() + " is not L = " + left.to_string());
        break;
    case Witness::Kind::right:
        if (w.pattern != right) return fail("pattern " + w.pattern.to_string() + " is not R = " + right.to_string());
        break;
    case Witness::Kind::homogeneous:
        if (!is_homogeneous(w.values)) return fail("subsequence is not monotone");
        break;
    }
    return true;
}

} // namespace ramsey
