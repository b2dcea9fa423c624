#pragma once

// Rainbow verification, first-moment parameters, random search, and an exact
// existence oracle for tiny parameters.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramsey/colour.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

inline constexpr double kDefaultWorkBudget = 1e9;

/// Work budget in elementary edge evaluations; RAMSEY_BUDGET overrides the default.
inline double work_budget()
{
    if (const char* env = std::getenv("RAMSEY_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return kDefaultWorkBudget;
}

struct RainbowReport {
    enum class Coverage { exhaustive, sampled };
    bool pass = true;
    Coverage coverage = Coverage::exhaustive;
    std::size_t t = 0;
    std::size_t p = 0;
    std::uint64_t sets_checked = 0;
    std::uint64_t seed = 0;                            // sampled mode only
    std::optional<std::vector<BinVertex>> violation;   // lexicographically least when exhaustive
    std::size_t violation_colours = 0;
    std::map<std::size_t, std::uint64_t> histogram;    // colours spanned -> number of t-sets
};

struct VerifyMode {
    bool sampled = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double budget = 0;  // 0 means work_budget()

    static VerifyMode exhaustive(double budget = 0) { return {false, 0, 0, budget}; }
    static VerifyMode sample(std::uint64_t trials, std::uint64_t seed) { return {true, trials, seed, 0}; }
};

namespace detail {

// Colours of all k-subsets of a sorted vertex list, interned to small integers.
class SetColourCounter {
public:
    explicit SetColourCounter(const Colouring& c) : c_(c), k_(c.uniformity()) {}

    std::size_t count(const std::vector<BinVertex>& t_set)
    {
        seen_.clear();
        Edge e(k_);
        for_each_combination(t_set.size(), k_, [&](std::span<const std::size_t> pick) {
            for (std::size_t i = 0; i < k_; ++i) e[i] = t_set[pick[i]];
            seen_.insert(c_.colour_unchecked(e));
        });
        return seen_.size();
    }

private:
    const Colouring& c_;
    std::size_t k_;
    std::set<ColourId> seen_;
};

// Uniform t-subset of the universe, sorted.
inline std::vector<BinVertex> sample_vertices(const Universe& u, std::size_t t, Rng& rng)
{
    std::vector<BinVertex> out;
    if (u.count) {
        for (auto id : rng.subset(*u.count, t)) out.push_back(u.vertex(id));
        return out;
    }
    std::set<BinVertex> picked;
    while (picked.size() < t) {
        BinVertex v(u.width);
        for (std::size_t i = 1; i <= u.width; ++i) v.set_bit(i, rng.next() & 1u);
        picked.insert(v);
    }
    return {picked.begin(), picked.end()};
}

} // namespace detail

/// Checks that every t-set spans at least p colours. Exhaustive mode proves it;
/// sampled mode only gathers evidence.
inline RainbowReport verify_rainbow(const Colouring& c, std::size_t t, std::size_t p, VerifyMode mode = {})
{
    const std::size_t k = c.uniformity();
    if (t < k) throw PreconditionError("t = " + std::to_string(t) + " is below the uniformity " + std::to_string(k));
    const Universe u = c.universe();
    RainbowReport rep;
    rep.t = t;
    rep.p = p;

    auto record = [&](std::vector<BinVertex>& set, std::size_t spanned) {
        ++rep.histogram[spanned];
        ++rep.sets_checked;
        if (spanned < p) {
            if (!rep.violation) {
                rep.violation = set;
                rep.violation_colours = spanned;
            }
            rep.pass = false;
        }
    };

    if (mode.sampled) {
        rep.coverage = RainbowReport::Coverage::sampled;
        rep.seed = mode.seed;
        if (u.count && *u.count < t) return rep;
        Rng rng(mode.seed);
        detail::SetColourCounter counter(c);
        for (std::uint64_t i = 0; i < mode.trials; ++i) {
            auto set = detail::sample_vertices(u, t, rng);
            record(set, counter.count(set));
        }
        return rep;
    }

    if (!u.count) throw BudgetExceeded("exhaustive verification over 2^" + std::to_string(u.width) +
                                           " vertices; use sampled mode", INFINITY, mode.budget);
    const std::uint64_t n = *u.count;
    const double budget = mode.budget > 0 ? mode.budget : work_budget();
    const double work = static_cast<double>(binomial(n, t)) * static_cast<double>(binomial(t, k));
    if (binomial(n, t) == kSaturated || work > budget)
        throw BudgetExceeded("exhaustive verification needs C(" + std::to_string(n) + "," + std::to_string(t) + ")*C(" +
                                 std::to_string(t) + "," + std::to_string(k) + ") edge evaluations; use sampled mode",
                             work, budget);
    if (n < t) return rep;

    // Colour every k-edge once, then work with interned integers.
    std::vector<std::uint32_t> colour_index(binomial(n, k));
    {
        std::unordered_map<ColourId, std::uint32_t, ColourHash> intern;
        Edge e(k);
        std::vector<std::uint64_t> ids(k);
        for_each_combination(n, k, [&](std::span<const std::size_t> pick) {
            for (std::size_t i = 0; i < k; ++i) {
                e[i] = u.vertex(pick[i]);
                ids[i] = pick[i];
            }
            const auto [it, fresh] = intern.emplace(c.colour_unchecked(e), static_cast<std::uint32_t>(intern.size()));
            colour_index[colex_rank(ids)] = it->second;
        });
    }

    std::vector<std::uint32_t> stamp(colour_index.size() + 1, 0);
    std::uint32_t epoch = 0;
    std::vector<std::uint64_t> sub(k);
    std::vector<BinVertex> set(t);
    for_each_combination(n, t, [&](std::span<const std::size_t> tset) {
        ++epoch;
        std::size_t spanned = 0;
        for_each_combination(t, k, [&](std::span<const std::size_t> pick) {
            for (std::size_t i = 0; i < k; ++i) sub[i] = tset[pick[i]];
            const std::uint32_t col = colour_index[colex_rank(sub)];
            if (stamp[col] != epoch) {
                stamp[col] = epoch;
                ++spanned;
            }
        });
        if (spanned < p && !rep.violation)
            for (std::size_t i = 0; i < t; ++i) set[i] = u.vertex(tset[i]);
        record(set, spanned);
    });
    return rep;
}

/// Recounts the colours spanned by a reported violation.
inline bool violation_revalidates(const Colouring& c, const RainbowReport& rep)
{
    if (!rep.violation) return false;
    detail::SetColourCounter counter(c);
    const std::size_t spanned = counter.count(*rep.violation);
    return spanned == rep.violation_colours && spanned < rep.p;
}

// ---------------------------------------------------------------------------
// First moment

struct FirstMomentParams {
    double epsilon = 0;
    double log2_n = 0;          // epsilon * t^{k-1}
    std::uint64_t n = 0;        // ceil(2^{log2_n}); kSaturated when capped
    bool capped = false;        // true when n exceeds 2^62
    std::uint64_t t0 = 0;       // ceil(e q)
};

inline FirstMomentParams first_moment_params(std::size_t k, std::size_t q, std::size_t t)
{
    if (k < 1 || q < 1) throw PreconditionError("first_moment_params needs k, q >= 1");
    FirstMomentParams fp;
    fp.epsilon = 1.0 / (static_cast<double>(q) * static_cast<double>(factorial(k)));
    fp.log2_n = fp.epsilon * std::pow(static_cast<double>(t), static_cast<double>(k - 1));
    if (fp.log2_n > 62) {
        fp.capped = true;
        fp.n = kSaturated;
    } else {
        fp.n = static_cast<std::uint64_t>(std::ceil(std::exp2(fp.log2_n) - 1e-9));
    }
    fp.t0 = static_cast<std::uint64_t>(std::ceil(std::numbers::e * static_cast<double>(q)));
    return fp;
}

inline double log_binomial(double n, double k)
{
    if (k < 0 || k > n) return -INFINITY;
    k = std::min(k, n - k);
    if (k <= 1000) {
        // Direct sum avoids cancellation between huge lgamma values.
        double s = 0;
        for (double i = 0; i < k; ++i) s += std::log((n - i) / (k - i));
        return s;
    }
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

/// Natural log of C(n,t) q (1 - 1/q)^{C(t,k)}, the bound on the expected number
/// of t-sets with fewer than q colours under a uniform q-colouring.
inline double log_expected_bad_sets(double n, std::size_t k, std::size_t q, std::size_t t)
{
    if (q <= 1) return log_binomial(n, static_cast<double>(t));
    const double ct = std::exp(log_binomial(static_cast<double>(t), static_cast<double>(k)));
    return log_binomial(n, static_cast<double>(t)) + std::log(static_cast<double>(q)) +
           ct * std::log1p(-1.0 / static_cast<double>(q));
}

/// Draws uniform q-colourings until one is (t;q,p)-rainbow by exhaustive check.
/// Attempt i uses seed + i.
struct RandomSearchResult {
    std::optional<Colouring> colouring;
    std::uint64_t attempts = 0;
    std::uint64_t seed_used = 0;
};

inline RandomSearchResult search_random_rainbow(std::size_t k, std::uint64_t n, std::uint32_t q, std::size_t t,
                                                std::size_t p, std::uint64_t max_attempts, std::uint64_t seed)
{
    if (t < k) throw PreconditionError("t must be at least k");
    const double work = static_cast<double>(binomial(n, t)) * static_cast<double>(binomial(t, k));
    if (work > work_budget()) throw BudgetExceeded("random search verification exceeds the work budget", work, work_budget());
    RandomSearchResult res;
    if (q < p) {
        // Fewer colours than required can never be rainbow once a t-set exists.
        if (n >= t) return res;
    }
    for (std::uint64_t i = 0; i < max_attempts; ++i) {
        ++res.attempts;
        auto c = random_colouring(k, n, q, seed + i);
        if (verify_rainbow(c, t, p, VerifyMode::exhaustive()).pass) {
            res.colouring = std::move(c);
            res.seed_used = seed + i;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Exact oracle

struct ExactResult {
    bool exists = false;
    std::optional<Colouring> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

class ExactSearch {
public:
    ExactSearch(std::size_t k, std::size_t n, std::size_t q, std::size_t t, std::size_t p, double budget)
        : k_(k), n_(n), q_(q), t_(t), p_(p), budget_(budget)
    {
        // Edges in colex order; for each, the t-sets whose colex-last edge it is.
        for_each_combination(n, k, [&](std::span<const std::size_t> e) { edges_.emplace_back(e.begin(), e.end()); });
        std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
        });
        colour_.assign(edges_.size(), 0);
        closes_.resize(edges_.size());
        std::vector<std::uint64_t> ids(k);
        for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
            const auto& e = edges_[ei];
            // The colex-last k-subset of a t-set is its top k elements, so the
            // other t - k elements lie below min(e).
            for_each_combination(e.front(), t - k, [&](std::span<const std::size_t> low) {
                std::vector<std::size_t> tset(low.begin(), low.end());
                tset.insert(tset.end(), e.begin(), e.end());
                std::vector<std::uint32_t> members;
                for_each_combination(t, k, [&](std::span<const std::size_t> pick) {
                    for (std::size_t i = 0; i < k; ++i) ids[i] = tset[pick[i]];
                    members.push_back(static_cast<std::uint32_t>(colex_rank(ids)));
                });
                closes_[ei].push_back(std::move(members));
            });
        }
        // Vertex m - 1 is complete once every edge inside [m] is coloured.
        for (std::size_t m = k; m <= std::min<std::size_t>(n, 6); ++m) prefix_done_[binomial(m, k)] = m;
    }

    std::optional<std::vector<std::uint32_t>> run(std::uint64_t& nodes)
    {
        nodes_ = 0;
        const bool found = dfs(0, 0);
        nodes = nodes_;
        if (found) return colour_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t ei, std::uint32_t used)
    {
        if (++nodes_ > budget_)
            throw BudgetExceeded("exact oracle exceeded its node budget", static_cast<double>(nodes_), budget_);
        if (auto it = prefix_done_.find(ei); it != prefix_done_.end() && !prefix_is_minimal(it->second)) return false;
        if (ei == edges_.size()) return true;
        const std::uint32_t options = static_cast<std::uint32_t>(std::min<std::size_t>(q_, used + 1));
        for (std::uint32_t col = 0; col < options; ++col) {
            colour_[ei] = col;
            if (closes_ok(ei) && dfs(ei + 1, std::max(used, col + 1))) return true;
        }
        return false;
    }

    bool closes_ok(std::size_t ei) const
    {
        for (const auto& members : closes_[ei]) {
            std::uint64_t mask = 0;
            std::size_t spanned = 0;
            for (auto r : members) {
                const std::uint64_t bit = std::uint64_t{1} << colour_[r];
                if (!(mask & bit)) {
                    mask |= bit;
                    if (++spanned >= p_) break;
                }
            }
            if (spanned < p_) return false;
        }
        return true;
    }

    // The colouring of [m], colour-normalised, must be lexicographically least
    // among its images under permutations of [m].
    bool prefix_is_minimal(std::size_t m) const
    {
        const std::size_t count = binomial(m, k_);
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        std::vector<std::uint32_t> image(count);
        std::vector<std::uint64_t> ids(k_);
        while (std::next_permutation(perm.begin(), perm.end())) {
            // image[r] = colour of the preimage of edge r, then normalise by first use.
            std::vector<std::int32_t> rename(q_, -1);
            std::int32_t next = 0;
            int cmp = 0;
            for (std::size_t r = 0; r < count && cmp == 0; ++r) {
                for (std::size_t i = 0; i < k_; ++i) ids[i] = perm[edges_[r][i]];
                std::sort(ids.begin(), ids.end());
                const std::uint32_t raw = colour_[colex_rank(ids)];
                if (rename[raw] < 0) rename[raw] = next++;
                const auto v = static_cast<std::uint32_t>(rename[raw]);
                if (v < colour_[r]) cmp = -1;
                else if (v > colour_[r]) cmp = 1;
            }
            if (cmp < 0) return false;
        }
        return true;
    }

    std::size_t k_, n_, q_, t_, p_;
    double budget_;
    std::vector<std::vector<std::size_t>> edges_;
    std::vector<std::uint32_t> colour_;
    std::vector<std::vector<std::vector<std::uint32_t>>> closes_;
    std::map<std::size_t, std::size_t> prefix_done_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Decides by complete search whether a (t;q,p)-rainbow q-colouring of
/// K_n^(k) exists. Isomorphs are rejected on the vertex prefix [min(n, 6)].
inline ExactResult exact_rainbow_exists(std::size_t k, std::size_t n, std::size_t q, std::size_t t, std::size_t p,
                                        double node_budget = 0)
{
    if (k < 1 || q < 1) throw PreconditionError("exact oracle needs k, q >= 1");
    if (t < k) throw PreconditionError("t must be at least k");
    if (q > 64) throw PreconditionError("exact oracle supports q <= 64");
    ExactResult res;
    if (n < t) {
        res.exists = true;
        res.witness = tabulate_from(k, n, static_cast<std::uint32_t>(q), [](auto) { return std::uint16_t{1}; });
        return res;
    }
    if (binomial(n, k) > 4096) throw BudgetExceeded("exact oracle limited to 4096 edges", static_cast<double>(binomial(n, k)), 4096);
    const double budget = node_budget > 0 ? node_budget : work_budget();
    detail::ExactSearch search(k, n, q, t, p, budget);
    const auto found = search.run(res.nodes);
    res.exists = found.has_value();
    if (found) {
        // Search edges are in colex order, which is the tabulated table order.
        std::vector<std::uint16_t> table(found->size());
        for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint16_t>((*found)[i] + 1);
        res.witness = make_tabulated(k, n, static_cast<std::uint32_t>(q), std::move(table), "tabulated", "exact oracle");
    }
    return res;
}

} // namespace ramsey
