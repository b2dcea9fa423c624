#pragma once

// Hedgehogs, the lifted set-colouring, piercing numbers and sunflowers, the
// monochromatic-hedgehog finder, and the Burr-Erdos pair.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/colour.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/rainbow.hpp"

namespace ramsey {

using VertexList = std::vector<std::size_t>;

/// Explicit r-uniform hypergraph on vertices 0..vertex_count-1. Colours are
/// optional, one per edge.
struct Hypergraph {
    std::size_t r = 0;
    std::size_t vertex_count = 0;
    std::vector<VertexList> edges;
    std::vector<std::uint32_t> colours;

    /// Sorts every edge and checks sizes, ranges and distinctness.
    static Hypergraph make(std::size_t r, std::size_t vertex_count, std::vector<VertexList> edges,
                           std::vector<std::uint32_t> colours = {})
    {
        if (r < 1) throw PreconditionError("uniformity must be at least 1");
        if (!colours.empty() && colours.size() != edges.size())
            throw PreconditionError("colour list length differs from edge count");
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (e.size() != r)
                throw PreconditionError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(r) +
                                        "-uniform hypergraph");
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw PreconditionError("edge repeats a vertex");
            if (e.back() >= vertex_count)
                throw PreconditionError("vertex " + std::to_string(e.back()) + " outside [0," +
                                        std::to_string(vertex_count) + ")");
        }
        std::vector<VertexList> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("duplicate edge");
        return {r, vertex_count, std::move(edges), std::move(colours)};
    }

    std::size_t edge_count() const noexcept { return edges.size(); }
};

// ---------------------------------------------------------------------------
// Hedgehogs

/// H_t^(k)(s): a body of t vertices and, for each s-subset of the body, one
/// k-edge with k - s private vertices.
struct Hedgehog {
    std::size_t t = 0, k = 0, s = 0;
    VertexList body;
    std::vector<VertexList> subsets;   // s-subsets of the body, lexicographic
    std::vector<VertexList> privates;  // private vertices of the matching edge
    std::size_t vertex_count = 0;

    static std::uint64_t expected_edges(std::size_t t, std::size_t s) { return binomial(t, s); }
    static std::uint64_t expected_vertices(std::size_t t, std::size_t k, std::size_t s)
    {
        return sat_add(t, sat_mul(k - s, binomial(t, s)));
    }

    VertexList edge(std::size_t i) const
    {
        VertexList e = subsets[i];
        e.insert(e.end(), privates[i].begin(), privates[i].end());
        std::sort(e.begin(), e.end());
        return e;
    }

    Hypergraph hypergraph() const
    {
        std::vector<VertexList> es;
        for (std::size_t i = 0; i < subsets.size(); ++i) es.push_back(edge(i));
        return Hypergraph::make(k, vertex_count, std::move(es));
    }
};

/// s for the balanced hedgehog of uniformity k.
inline std::size_t balanced_s(std::size_t k) { return (k + 1) / 2; }

inline Hedgehog build_hedgehog(std::size_t t, std::size_t k, std::size_t s)
{
    if (s < 1 || k <= s) throw PreconditionError("hedgehog needs k > s >= 1");
    if (t < s) throw PreconditionError("hedgehog needs t >= s");
    const std::uint64_t verts = Hedgehog::expected_vertices(t, k, s);
    if (verts > (std::uint64_t{1} << 24)) throw BudgetExceeded("hedgehog too large to build", static_cast<double>(verts), 1 << 24);
    Hedgehog h{t, k, s, {}, {}, {}, 0};
    for (std::size_t i = 0; i < t; ++i) h.body.push_back(i);
    std::size_t next = t;
    for_each_combination(t, s, [&](std::span<const std::size_t> c) {
        h.subsets.emplace_back(c.begin(), c.end());
        VertexList priv;
        for (std::size_t j = 0; j < k - s; ++j) priv.push_back(next++);
        h.privates.push_back(std::move(priv));
    });
    h.vertex_count = next;
    return h;
}

// ---------------------------------------------------------------------------
// Degeneracy

/// Incidence of each vertex of `order` at the moment it is removed.
inline std::vector<std::size_t> peel_incidences(const Hypergraph& h, const VertexList& order)
{
    std::vector<std::vector<std::size_t>> incident(h.vertex_count);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (auto v : h.edges[i]) incident[v].push_back(i);
    std::vector<char> edge_alive(h.edges.size(), 1);
    std::vector<std::size_t> out;
    for (auto v : order) {
        if (v >= h.vertex_count) throw PreconditionError("peel order names a vertex outside the hypergraph");
        std::size_t inc = 0;
        for (auto e : incident[v])
            if (edge_alive[e]) {
                ++inc;
                edge_alive[e] = 0;
            }
        out.push_back(inc);
    }
    return out;
}

/// Max over a minimum-incidence peeling of the incidence at removal time.
inline std::size_t degeneracy(const Hypergraph& h)
{
    std::vector<std::vector<std::size_t>> incident(h.vertex_count);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (auto v : h.edges[i]) incident[v].push_back(i);
    std::vector<std::size_t> deg(h.vertex_count);
    for (std::size_t v = 0; v < h.vertex_count; ++v) deg[v] = incident[v].size();
    std::vector<char> alive(h.vertex_count, 1), edge_alive(h.edges.size(), 1);
    std::size_t best = 0;
    for (std::size_t round = 0; round < h.vertex_count; ++round) {
        std::size_t pick = h.vertex_count;
        for (std::size_t v = 0; v < h.vertex_count; ++v)
            if (alive[v] && (pick == h.vertex_count || deg[v] < deg[pick])) pick = v;
        best = std::max(best, deg[pick]);
        alive[pick] = 0;
        for (auto e : incident[pick])
            if (edge_alive[e]) {
                edge_alive[e] = 0;
                for (auto u : h.edges[e]) --deg[u];
            }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Lifted set-colouring

/// Colours a k-edge by the set of base colours on its s-subsets, padded with
/// the smallest absent base colours up to p = C(k,s).
class LiftedColouring final : public ColouringImpl {
public:
    LiftedColouring(Colouring base, std::size_t k) : base_(std::move(base)), k_(k)
    {
        const std::size_t s = base_.uniformity();
        if (k <= s) throw PreconditionError("lifting needs k > s");
        if (k > 16) throw PreconditionError("lifting supports k <= 16");
        p_ = binomial(k, s);
        if (base_.budget() < p_)
            throw PreconditionError("base has " + std::to_string(base_.budget()) + " colours, padding needs p = C(" +
                                    std::to_string(k) + "," + std::to_string(s) + ") = " + std::to_string(p_));
        const Universe u = base_.universe();
        if (u.count && *u.count < k) throw PreconditionError("lifting needs n >= k");
        padding_ = base_.palette_prefix(p_);
    }

    std::size_t uniformity() const override { return k_; }
    Universe universe() const override { return base_.universe(); }

    ColourId evaluate(EdgeView edge, Trace* trace) const override
    {
        const std::size_t s = base_.uniformity();
        std::vector<ColourId> seen;
        Edge sub(s);
        for_each_combination(edge.size(), s, [&](std::span<const std::size_t> pick) {
            for (std::size_t i = 0; i < s; ++i) sub[i] = edge[pick[i]];
            seen.push_back(base_.colour_unchecked(sub));
        });
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        const std::size_t spanned = seen.size();
        for (const auto& c : padding_) {
            if (seen.size() >= p_) break;
            if (!std::binary_search(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(spanned), c))
                seen.push_back(c);
        }
        if (trace)
            trace->push_back("lift: s-subsets span " + std::to_string(spanned) + " base colours, padded to " +
                             std::to_string(seen.size()));
        return ColourId::set(std::move(seen));
    }

    std::vector<ColourId> palette_prefix(std::size_t count) const override
    {
        if (count > budget()) throw PreconditionError("palette has only " + std::to_string(budget()) + " colours");
        const std::size_t q = static_cast<std::size_t>(std::min<std::uint64_t>(base_.budget(), 4096));
        const auto pal = base_.palette_prefix(q);
        std::vector<ColourId> out;
        for_each_combination(q, p_, [&](std::span<const std::size_t> c) {
            if (out.size() >= count) return false;
            std::vector<ColourId> m;
            for (auto i : c) m.push_back(pal[i]);
            out.push_back(ColourId::set(std::move(m)));
            return true;
        });
        return out;
    }

    std::uint64_t budget() const override { return binomial(base_.budget(), p_); }
    std::string kind() const override { return "hedgehog-lifted"; }

    std::vector<std::string> provenance() const override
    {
        auto out = base_.provenance();
        out.push_back("lifted to uniformity " + std::to_string(k_) + ": colour = set of " + std::to_string(p_) +
                      " base colours on the " + std::to_string(base_.uniformity()) + "-subsets, padded");
        return out;
    }

    const Colouring& base() const noexcept { return base_; }
    std::size_t p() const noexcept { return p_; }

private:
    Colouring base_;
    std::size_t k_;
    std::size_t p_ = 0;
    std::vector<ColourId> padding_;
};

inline Colouring lift_colouring(const Colouring& base, std::size_t k)
{
    return Colouring(std::make_shared<LiftedColouring>(base, k));
}

struct SpreadReport {
    bool pass = true;
    bool vacuous = false;
    std::size_t t = 0, s = 0, k = 0, p = 0, p_prime = 0;
    std::uint64_t bodies = 0;                // bodies certified through the base
    std::size_t min_base_colours = 0;        // fewest base colours on any body
    std::size_t certified_lifted = 0;        // ceil(min_base_colours / p)
    std::uint64_t embeddings = 0;
    std::size_t min_embedding_colours = 0;
    std::uint64_t seed = 0;
    std::optional<std::vector<std::uint64_t>> violation;  // embedding vertices, body first
};

/// Certifies every body of the base through the pigeonhole chain and spot-checks
/// random hedgehog embeddings directly.
inline SpreadReport verify_hedgehog_spread(const Colouring& lifted, std::size_t t, std::size_t p_prime,
                                           std::uint64_t trials, std::uint64_t seed)
{
    const auto* impl = lifted.as<LiftedColouring>();
    if (!impl) throw PreconditionError("verify_hedgehog_spread needs a lifted colouring");
    SpreadReport rep;
    rep.t = t;
    rep.k = lifted.uniformity();
    rep.s = impl->base().uniformity();
    rep.p = impl->p();
    rep.p_prime = p_prime;
    rep.seed = seed;
    if (t < rep.s) {
        rep.vacuous = true;
        return rep;
    }
    const std::size_t need = p_prime * rep.p + 1;
    const auto base_rep = verify_rainbow(impl->base(), t, need);
    if (!base_rep.pass) {
        std::string set;
        for (const auto& v : *base_rep.violation) set += (set.empty() ? "" : " ") + v.to_string();
        throw PreconditionError("base not verified: body {" + set + "} spans " +
                                std::to_string(base_rep.violation_colours) + " < " + std::to_string(need) + " colours");
    }
    rep.bodies = base_rep.sets_checked;
    rep.min_base_colours = base_rep.histogram.empty() ? 0 : base_rep.histogram.begin()->first;
    rep.certified_lifted = (rep.min_base_colours + rep.p - 1) / rep.p;
    if (rep.bodies && rep.certified_lifted < p_prime + 1) rep.pass = false;

    const Universe u = lifted.universe();
    const auto shape = build_hedgehog(t, rep.k, rep.s);
    if (!u.count || *u.count < shape.vertex_count) return rep;
    Rng rng(seed);
    rep.min_embedding_colours = SIZE_MAX;
    std::vector<std::uint64_t> ids(rep.k);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto verts = rng.subset(*u.count, shape.vertex_count);
        std::shuffle(verts.begin(), verts.end(), rng.engine());
        std::set<ColourId> seen;
        for (std::size_t i = 0; i < shape.subsets.size(); ++i) {
            const auto e = shape.edge(i);
            for (std::size_t j = 0; j < e.size(); ++j) ids[j] = verts[e[j]];
            std::sort(ids.begin(), ids.end());
            seen.insert(lifted.colour_of_ids(ids));
        }
        ++rep.embeddings;
        rep.min_embedding_colours = std::min(rep.min_embedding_colours, seen.size());
        if (seen.size() < p_prime + 1) {
            rep.pass = false;
            if (!rep.violation) rep.violation = verts;
        }
    }
    if (!rep.embeddings) rep.min_embedding_colours = 0;
    return rep;
}

// ---------------------------------------------------------------------------
// Piercing numbers and sunflowers

struct PiercingResult {
    std::size_t tau = 0;       // exact when `exact`, otherwise the upper bound
    VertexList witness;        // a hitting set of size `upper`
    bool exact = true;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

// Size of a greedy family of pairwise disjoint sets: a lower bound on tau.
inline std::size_t disjoint_lower_bound(const std::vector<VertexList>& sets, const std::vector<std::size_t>& which,
                                        std::vector<char>& mark)
{
    std::size_t count = 0;
    std::vector<std::size_t> touched;
    for (auto i : which) {
        const auto& s = sets[i];
        if (std::any_of(s.begin(), s.end(), [&](std::size_t v) { return mark[v]; })) continue;
        for (auto v : s) {
            mark[v] = 1;
            touched.push_back(v);
        }
        ++count;
    }
    for (auto v : touched) mark[v] = 0;
    return count;
}

class HittingSetSearch {
public:
    HittingSetSearch(std::vector<VertexList> sets, std::size_t universe, double budget)
        : sets_(std::move(sets)), mark_(universe, 0), chosen_(universe, 0), budget_(budget)
    {
    }

    PiercingResult run()
    {
        PiercingResult res;
        if (sets_.empty()) return res;
        std::vector<std::size_t> all(sets_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        // Greedy upper bound: repeatedly take the vertex hitting most remaining sets.
        {
            std::vector<std::size_t> left = all;
            while (!left.empty()) {
                std::map<std::size_t, std::size_t> freq;
                for (auto i : left)
                    for (auto v : sets_[i]) ++freq[v];
                const auto best = std::max_element(freq.begin(), freq.end(), [](const auto& a, const auto& b) {
                    return a.second < b.second || (a.second == b.second && a.first > b.first);
                });
                best_.push_back(best->first);
                std::erase_if(left, [&](std::size_t i) {
                    return std::binary_search(sets_[i].begin(), sets_[i].end(), best->first);
                });
            }
            std::sort(best_.begin(), best_.end());
        }
        res.lower = disjoint_lower_bound(sets_, all, mark_);
        if (res.lower == best_.size()) {
            res.tau = res.upper = best_.size();
            res.witness = best_;
            return res;
        }
        try {
            dfs(all);
            res.exact = true;
            res.lower = best_.size();
        } catch (const BudgetExceeded&) {
            res.exact = false;
        }
        res.nodes = nodes_;
        res.upper = best_.size();
        res.tau = res.upper;
        res.witness = best_;
        return res;
    }

private:
    void dfs(const std::vector<std::size_t>& open)
    {
        if (++nodes_ > budget_) throw BudgetExceeded("hitting set search", static_cast<double>(nodes_), budget_);
        if (open.empty()) {
            best_ = current_;
            std::sort(best_.begin(), best_.end());
            return;
        }
        if (current_.size() + disjoint_lower_bound(sets_, open, mark_) >= best_.size()) return;
        // Branch on the smallest open set.
        const std::size_t pivot = *std::min_element(open.begin(), open.end(), [&](std::size_t a, std::size_t b) {
            return sets_[a].size() < sets_[b].size();
        });
        for (auto v : sets_[pivot]) {
            if (chosen_[v]) continue;
            chosen_[v] = 1;
            current_.push_back(v);
            std::vector<std::size_t> rest;
            for (auto i : open)
                if (!std::binary_search(sets_[i].begin(), sets_[i].end(), v)) rest.push_back(i);
            dfs(rest);
            current_.pop_back();
            chosen_[v] = 0;
            if (current_.size() + 1 >= best_.size()) return;
        }
    }

    std::vector<VertexList> sets_;
    std::vector<char> mark_, chosen_;
    VertexList current_, best_;
    double budget_;
    std::uint64_t nodes_ = 0;
};

// Edges containing A (optionally of one colour), minus A.
inline std::vector<VertexList> link_of(const Hypergraph& h, const VertexList& a, std::optional<std::uint32_t> colour)
{
    std::vector<VertexList> link;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (colour && (h.colours.empty() || h.colours[i] != *colour)) continue;
        const auto& e = h.edges[i];
        if (!std::includes(e.begin(), e.end(), a.begin(), a.end())) continue;
        VertexList rest;
        std::set_difference(e.begin(), e.end(), a.begin(), a.end(), std::back_inserter(rest));
        link.push_back(std::move(rest));
    }
    return link;
}

} // namespace detail

/// Minimum hitting set of the sets (each sorted) over vertices < universe.
inline PiercingResult min_hitting_set(std::vector<VertexList> sets, std::size_t universe, double node_budget = 0)
{
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (s.empty()) throw PreconditionError("an empty set cannot be hit");
        if (s.back() >= universe) throw PreconditionError("set element outside the universe");
    }
    return detail::HittingSetSearch(std::move(sets), universe, node_budget > 0 ? node_budget : work_budget()).run();
}

/// Smallest set of vertices outside A meeting every edge that contains A.
/// Over budget, returns certified bounds with exact = false.
inline PiercingResult piercing_number(const Hypergraph& h, VertexList a, std::optional<std::uint32_t> colour = {},
                                      double node_budget = 0)
{
    std::sort(a.begin(), a.end());
    if (a.size() >= h.r) throw PreconditionError("|A| must be below the uniformity");
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw PreconditionError("A repeats a vertex");
    return min_hitting_set(detail::link_of(h, a, colour), h.vertex_count, node_budget);
}

/// m edges at v pairwise meeting exactly in {v}, found greedily. The greedy
/// always succeeds when tau(v) >= (r-1)m; on failure the error reports tau(v).
inline std::vector<VertexList> extract_sunflower(const Hypergraph& h, std::size_t v, std::size_t m,
                                                 double node_budget = 0)
{
    if (v >= h.vertex_count) throw PreconditionError("vertex outside the hypergraph");
    std::vector<VertexList> out;
    std::vector<char> used(h.vertex_count, 0);
    for (const auto& e : h.edges) {
        if (out.size() == m) break;
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        if (std::any_of(e.begin(), e.end(), [&](std::size_t u) { return u != v && used[u]; })) continue;
        for (auto u : e) used[u] = 1;
        out.push_back(e);
    }
    if (out.size() == m) return out;
    const auto tau = piercing_number(h, {v}, {}, node_budget);
    throw PreconditionError("sunflower needs tau(v) >= (r-1)m = " + std::to_string((h.r - 1) * m) +
                            ", but tau(v) = " + std::to_string(tau.tau) + (tau.exact ? "" : " (upper bound)") +
                            "; greedy found " + std::to_string(out.size()) + " petals");
}

// ---------------------------------------------------------------------------
// Monochromatic hedgehog finder for 2-colourings of K_n^(2k+1)

struct HedgehogEmbedding {
    struct Spine {
        VertexList subset;
        VertexList privates;
        ColourId colour;
    };
    std::size_t t = 0, r = 0, s = 0;
    VertexList body;
    std::vector<Spine> spine;
};

/// Re-checks shape, disjointness and that every spine edge has the recorded,
/// common colour.
inline bool validate_hedgehog_embedding(const Colouring& c, const HedgehogEmbedding& emb, std::string* why = nullptr)
{
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (c.uniformity() != emb.r) return fail("uniformity mismatch");
    if (emb.body.size() != emb.t) return fail("body has " + std::to_string(emb.body.size()) + " vertices, expected t");
    VertexList body = emb.body;
    std::sort(body.begin(), body.end());
    if (std::adjacent_find(body.begin(), body.end()) != body.end()) return fail("body repeats a vertex");
    if (emb.spine.size() != binomial(emb.t, emb.s)) return fail("wrong number of spine edges");
    std::set<VertexList> subsets;
    std::set<std::size_t> privates;
    std::vector<std::uint64_t> ids;
    for (const auto& sp : emb.spine) {
        VertexList sub = sp.subset;
        std::sort(sub.begin(), sub.end());
        if (sub.size() != emb.s || std::adjacent_find(sub.begin(), sub.end()) != sub.end() ||
            !std::includes(body.begin(), body.end(), sub.begin(), sub.end()))
            return fail("spine subset is not an s-subset of the body");
        if (!subsets.insert(sub).second) return fail("spine subset repeated");
        if (sp.privates.size() != emb.r - emb.s) return fail("spine edge has the wrong number of private vertices");
        for (auto v : sp.privates) {
            if (std::binary_search(body.begin(), body.end(), v)) return fail("private vertex lies in the body");
            if (!privates.insert(v).second) return fail("private vertex " + std::to_string(v) + " shared");
        }
        ids.assign(sub.begin(), sub.end());
        ids.insert(ids.end(), sp.privates.begin(), sp.privates.end());
        std::sort(ids.begin(), ids.end());
        const ColourId got = c.colour_of_ids(ids);
        if (got != sp.colour) return fail("recorded colour " + sp.colour.to_string() + " but edge has " + got.to_string());
        if (got != emb.spine.front().colour) return fail("spine edges are not monochromatic");
    }
    return true;
}

/// Red sunflower at a (k+1)-set core, built from the g_ij edges; shows the
/// core is not in danger of that colour.
struct GijCertificate {
    std::uint8_t colour = 0;    // 0 red, 1 blue
    std::size_t index = 0;      // i (red) or j (blue), 0-based
    VertexList core;            // e_i or f_j
    std::vector<VertexList> edges;
    std::size_t red_total = 0;
};

struct MonoHedgehogStage {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct MonoHedgehogResult {
    std::optional<HedgehogEmbedding> embedding;
    std::vector<MonoHedgehogStage> stages;
    std::string failed_stage;  // empty on success
    std::size_t k = 0, t = 0, n = 0;
    std::uint8_t colour = 0;   // 0 red, 1 blue
    std::size_t x_size = 0;
    std::size_t y_size = 0;
    double y_bound = 0;        // n / (2 * 2k t^{k+1})
    std::optional<GijCertificate> certificate;
};

namespace detail {

// Sorted union of two sorted lists.
inline VertexList merge_sorted(const VertexList& a, const VertexList& b)
{
    VertexList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class MonoFinder {
public:
    MonoFinder(const Colouring& c, std::size_t t, double budget) : t_(t), budget_(budget)
    {
        r_ = c.uniformity();
        if (r_ < 3 || r_ % 2 == 0) throw PreconditionError("find_mono_hedgehog needs a (2k+1)-uniform colouring, k >= 1");
        k_ = (r_ - 1) / 2;
        const Universe u = c.universe();
        if (!u.count) throw PreconditionError("find_mono_hedgehog needs an explicitly sized universe");
        n_ = static_cast<std::size_t>(*u.count);
        if (t_ < k_ + 1) throw PreconditionError("body size t must be at least k+1");
        const std::uint64_t hv = Hedgehog::expected_vertices(t_, r_, k_ + 1);
        if (n_ < hv)
            throw PreconditionError("n = " + std::to_string(n_) + " is below |V(H)| = " + std::to_string(hv));
        const std::uint64_t edges = binomial(n_, r_);
        if (edges == kSaturated || static_cast<double>(edges) > budget_)
            throw BudgetExceeded("tabulating the colouring", static_cast<double>(edges), budget_);
        red_colour_ = c.palette_prefix(1).front();
        chi_.assign(edges, 0);
        std::vector<std::uint64_t> ids(r_);
        std::optional<ColourId> blue;
        for_each_combination(n_, r_, [&](std::span<const std::size_t> e) {
            ids.assign(e.begin(), e.end());
            const ColourId col = c.colour_of_ids(ids);
            if (col == red_colour_) return;
            if (!blue) blue = col;
            if (col != *blue) throw PreconditionError("colouring uses more than two colours");
            chi_[colex_rank(ids)] = 1;
        });
        blue_colour_ = blue.value_or(red_colour_);
        tk1_ = static_cast<std::size_t>(sat_pow(t_, k_ + 1));
    }

    MonoHedgehogResult run()
    {
        MonoHedgehogResult res;
        res.k = k_;
        res.t = t_;
        res.n = n_;
        const std::uint64_t threshold_n = sat_pow(t_, k_ + 3);
        res.stages.push_back({"threshold", n_ >= threshold_n,
                              "n = " + std::to_string(n_) + ", t^(k+3) = " + std::to_string(threshold_n)});

        colour_danger();
        res.stages.push_back({"danger", true,
                              std::to_string(danger_count_[0]) + " red-danger and " + std::to_string(danger_count_[1]) +
                                  " blue-danger (k+1)-sets, threshold t^(k+1) = " + std::to_string(tk1_)});

        const std::size_t peril_t = 2 * k_ * tk1_;
        std::vector<std::uint8_t> peril(n_, 2);
        for (std::size_t v = 0; v < n_; ++v) {
            if (vertex_piercing_at_most(v, 0, peril_t)) peril[v] = 0;
            else if (vertex_piercing_at_most(v, 1, peril_t)) peril[v] = 1;
            else {
                res.stages.push_back({"peril", false, "vertex " + std::to_string(v) + " is in neither peril"});
                res.failed_stage = "peril";
                res.certificate = peril_contradiction(v);
                return res;
            }
        }
        const std::size_t reds = static_cast<std::size_t>(std::count(peril.begin(), peril.end(), 0));
        const std::uint8_t col = reds >= n_ - reds ? 0 : 1;
        res.colour = col;
        VertexList x;
        for (std::size_t v = 0; v < n_; ++v)
            if (peril[v] == col) x.push_back(v);
        res.x_size = x.size();
        res.stages.push_back({"peril", true,
                              std::to_string(reds) + " red-peril vertices, " + std::to_string(n_ - reds) +
                                  " blue-peril; X takes " + (col == 0 ? "red" : "blue") + ", threshold 2k t^(k+1) = " +
                                  std::to_string(peril_t)});

        // Y: greedy subset of X spanning no (k+1)-set in danger of the chosen colour.
        res.y_bound = static_cast<double>(n_) / (2.0 * static_cast<double>(peril_t));
        VertexList y;
        for (auto v : x) {
            if (y.size() == t_) break;
            bool ok = true;
            if (y.size() >= k_)
                for_each_combination(y.size(), k_, [&](std::span<const std::size_t> pick) {
                    VertexList e{v};
                    for (auto i : pick) e.push_back(y[i]);
                    std::sort(e.begin(), e.end());
                    if (danger_[rank(e)] == col + 1) ok = false;
                    return ok;
                });
            if (ok) y.push_back(v);
        }
        res.y_size = y.size();
        const bool y_ok = y.size() >= t_;
        res.stages.push_back({"body", y_ok,
                              "greedy Y reached " + std::to_string(y.size()) + " of t = " + std::to_string(t_) +
                                  " (proof bound n/(4k t^(k+1)) = " + std::to_string(res.y_bound) + ")"});
        if (!y_ok) {
            res.failed_stage = "body";
            return res;
        }

        HedgehogEmbedding emb;
        emb.t = t_;
        emb.r = r_;
        emb.s = k_ + 1;
        emb.body = y;
        std::vector<char> used(n_, 0);
        for (auto v : y) used[v] = 1;
        bool spine_ok = true;
        for_each_combination(t_, k_ + 1, [&](std::span<const std::size_t> pick) {
            VertexList sub;
            for (auto i : pick) sub.push_back(y[i]);
            VertexList avail;
            for (std::size_t v = 0; v < n_; ++v)
                if (!used[v]) avail.push_back(v);
            std::optional<VertexList> priv;
            if (avail.size() >= k_)
                for_each_combination(avail.size(), k_, [&](std::span<const std::size_t> p) {
                    VertexList cand;
                    for (auto i : p) cand.push_back(avail[i]);
                    if (chi(merge_sorted(sub, cand)) == col) {
                        priv = cand;
                        return false;
                    }
                    return true;
                });
            if (!priv) {
                spine_ok = false;
                return false;
            }
            for (auto v : *priv) used[v] = 1;
            emb.spine.push_back({sub, *priv, col == 0 ? red_colour_ : blue_colour_});
            return true;
        });
        res.stages.push_back({"spine", spine_ok,
                              spine_ok ? "private vertices found greedily for all " + std::to_string(emb.spine.size()) +
                                             " spine edges"
                                       : "ran out of private vertices"});
        if (!spine_ok) {
            res.failed_stage = "spine";
            return res;
        }
        res.embedding = std::move(emb);
        return res;
    }

    // g_ij edges for red sunflower e and blue sunflower f at a common vertex,
    // padded from pools A_{(i+j-1) mod s}.
    GijCertificate gij(const std::vector<VertexList>& e, const std::vector<VertexList>& f,
                       const std::vector<VertexList>& pools) const
    {
        const std::size_t s = e.size();
        if (f.size() != s || pools.size() != s) throw PreconditionError("g_ij needs s red, s blue edges and s pools");
        std::vector<std::vector<VertexList>> g(s, std::vector<VertexList>(s));
        std::vector<std::size_t> red_row(s, 0), blue_col(s, 0);
        std::size_t red_total = 0;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                VertexList u = merge_sorted(e[i], f[j]);
                const auto& pool = pools[(i + j + 1) % s];  // (i+j-1) mod s with 1-based i, j
                for (std::size_t a = 0; u.size() < r_ && a < pool.size(); ++a) u.push_back(pool[a]);
                std::sort(u.begin(), u.end());
                if (u.size() != r_) throw PreconditionError("g_ij pools too small to pad to uniformity");
                g[i][j] = u;
                if (chi(u) == 0) {
                    ++red_row[i];
                    ++red_total;
                } else {
                    ++blue_col[j];
                }
            }
        GijCertificate cert;
        cert.red_total = red_total;
        const auto ri = std::max_element(red_row.begin(), red_row.end()) - red_row.begin();
        const auto bj = std::max_element(blue_col.begin(), blue_col.end()) - blue_col.begin();
        if (2 * red_total >= s * s) {
            cert.colour = 0;
            cert.index = static_cast<std::size_t>(ri);
            cert.core = e[cert.index];
            for (std::size_t j = 0; j < s; ++j)
                if (chi(g[cert.index][j]) == 0) cert.edges.push_back(g[cert.index][j]);
        } else {
            cert.colour = 1;
            cert.index = static_cast<std::size_t>(bj);
            cert.core = f[cert.index];
            for (std::size_t i = 0; i < s; ++i)
                if (chi(g[i][cert.index]) == 1) cert.edges.push_back(g[i][cert.index]);
        }
        return cert;
    }

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t tk1() const noexcept { return tk1_; }

private:
    static std::uint64_t sat_pow(std::uint64_t b, std::size_t e)
    {
        std::uint64_t out = 1;
        for (std::size_t i = 0; i < e; ++i) out = sat_mul(out, b);
        return out;
    }

    static std::uint64_t rank(const VertexList& sorted)
    {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(sorted[i], i + 1);
        return r;
    }

    std::uint8_t chi(const VertexList& sorted) const { return chi_[rank(sorted)]; }

    // k-subsets of the complement of `core` completing it to an edge of colour col.
    std::vector<VertexList> edge_link(const VertexList& core, std::uint8_t col) const
    {
        VertexList rest;
        for (std::size_t v = 0; v < n_; ++v)
            if (!std::binary_search(core.begin(), core.end(), v)) rest.push_back(v);
        std::vector<VertexList> link;
        const std::size_t need = r_ - core.size();
        for_each_combination(rest.size(), need, [&](std::span<const std::size_t> p) {
            VertexList add;
            for (auto i : p) add.push_back(rest[i]);
            if (chi(merge_sorted(core, add)) == col) link.push_back(std::move(add));
        });
        return link;
    }

    // Decides tau(sets) < bound using cheap bounds first.
    bool tau_below(const std::vector<VertexList>& sets, std::size_t bound) const
    {
        if (sets.size() < bound) return true;
        std::vector<std::size_t> all(sets.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::vector<char> mark(n_, 0);
        if (disjoint_lower_bound(sets, all, mark) >= bound) return false;
        const auto res = min_hitting_set(sets, n_, budget_);
        if (!res.exact && res.upper >= bound && res.lower < bound)
            throw BudgetExceeded("piercing threshold undecided", budget_, budget_);
        return res.tau < bound;
    }

    void colour_danger()
    {
        danger_.assign(binomial(n_, k_ + 1), 0);
        for_each_combination(n_, k_ + 1, [&](std::span<const std::size_t> e) {
            const VertexList core(e.begin(), e.end());
            std::uint8_t d = 0;
            if (tau_below(edge_link(core, 0), tk1_)) d = 1;
            else if (tau_below(edge_link(core, 1), tk1_)) d = 2;
            danger_[rank(core)] = d;
            if (d) ++danger_count_[d - 1];
        });
    }

    // k-sets f with {v} + f in danger of colour col.
    std::vector<VertexList> danger_link(std::size_t v, std::uint8_t col) const
    {
        std::vector<VertexList> link;
        VertexList rest;
        for (std::size_t u = 0; u < n_; ++u)
            if (u != v) rest.push_back(u);
        for_each_combination(rest.size(), k_, [&](std::span<const std::size_t> p) {
            VertexList f;
            for (auto i : p) f.push_back(rest[i]);
            if (danger_[rank(merge_sorted({v}, f))] == col + 1) link.push_back(std::move(f));
        });
        return link;
    }

    bool vertex_piercing_at_most(std::size_t v, std::uint8_t col, std::size_t bound) const
    {
        return tau_below(danger_link(v, col), bound + 1);
    }

    // A vertex in neither peril yields s red and s blue danger edges at v; the
    // g_ij edges then show one of them is not in danger after all.
    std::optional<GijCertificate> peril_contradiction(std::size_t v) const
    {
        const std::size_t s = 2 * tk1_;
        auto petals = [&](std::uint8_t col) {
            std::vector<VertexList> out;
            std::vector<char> used(n_, 0);
            for (const auto& f : danger_link(v, col)) {
                if (out.size() == s) break;
                if (std::any_of(f.begin(), f.end(), [&](std::size_t u) { return used[u]; })) continue;
                for (auto u : f) used[u] = 1;
                out.push_back(merge_sorted({v}, f));
            }
            return out;
        };
        const auto e = petals(0), f = petals(1);
        if (e.size() < s || f.size() < s) return std::nullopt;
        std::vector<char> used(n_, 0);
        for (const auto& x : e)
            for (auto u : x) used[u] = 1;
        for (const auto& x : f)
            for (auto u : x) used[u] = 1;
        std::vector<VertexList> pools(s);
        std::size_t next = 0;
        for (auto& pool : pools)
            while (pool.size() + 1 < k_ && next < n_) {
                if (!used[next]) pool.push_back(next);
                ++next;
            }
        for (const auto& pool : pools)
            if (pool.size() != k_ - 1) return std::nullopt;
        return gij(e, f, pools);
    }

    std::size_t t_, r_ = 0, k_ = 0, n_ = 0, tk1_ = 0;
    double budget_;
    ColourId red_colour_, blue_colour_;
    std::vector<std::uint8_t> chi_;     // 0 red, 1 blue, by colex rank
    std::vector<std::uint8_t> danger_;  // 0 none, 1 red, 2 blue, by colex rank of (k+1)-sets
    std::size_t danger_count_[2] = {0, 0};
};

} // namespace detail

/// Builds a monochromatic balanced hedgehog with body t in a 2-colouring of
/// K_n^(2k+1), following the danger/peril argument. The first palette colour
/// is red. Stages are reported; an incomplete run names the stage that failed.
inline MonoHedgehogResult find_mono_hedgehog(const Colouring& c, std::size_t t, double node_budget = 0)
{
    detail::MonoFinder finder(c, t, node_budget > 0 ? node_budget : work_budget());
    auto res = finder.run();
    if (res.embedding) {
        std::string why;
        if (!validate_hedgehog_embedding(c, *res.embedding, &why))
            throw Error("internal: finder produced an invalid embedding: " + why);
    }
    return res;
}

/// Runs the g_ij construction on explicit sunflowers e (red danger) and f
/// (blue danger) sharing one vertex, with padding pools of size k-1.
inline GijCertificate gij_certificate(const Colouring& c, std::size_t t, const std::vector<VertexList>& e,
                                      const std::vector<VertexList>& f, const std::vector<VertexList>& pools)
{
    detail::MonoFinder finder(c, t, work_budget());
    return finder.gij(e, f, pools);
}

// ---------------------------------------------------------------------------
// Burr-Erdos pair

/// The 3-graph on V = [n] and B = x_1..x_{m+1}, m = C(n,2): triples
/// {x,y,x_i}, {x,y,x_{i+1}} for the i-th pair {x,y}, and all triples inside
/// each window {x_i..x_{i+4}}, i <= m-3. Vertex x_i has id n + i - 1.
struct BurrErdosGraph {
    std::size_t n = 0;
    std::size_t m = 0;
    Hypergraph h;

    std::size_t x(std::size_t i) const { return n + i - 1; }

    /// Smallest B vertex first, then V.
    VertexList peel_order() const
    {
        VertexList order;
        for (std::size_t i = 1; i <= m + 1; ++i) order.push_back(x(i));
        for (std::size_t v = 0; v < n; ++v) order.push_back(v);
        return order;
    }
};

inline BurrErdosGraph burr_erdos_graph(std::size_t n)
{
    if (n < 4 || n % 4) throw PreconditionError("Burr-Erdos construction needs n divisible by 4, n >= 4");
    BurrErdosGraph g;
    g.n = n;
    g.m = binomial(n, 2);
    std::set<VertexList> edges;
    std::size_t i = 1;
    for_each_combination(n, 2, [&](std::span<const std::size_t> e) {
        edges.insert({e[0], e[1], g.x(i)});
        edges.insert({e[0], e[1], g.x(i + 1)});
        ++i;
    });
    for (std::size_t w = 1; w + 3 <= g.m; ++w)
        for_each_combination(5, 3, [&](std::span<const std::size_t> c) {
            edges.insert({g.x(w + c[0]), g.x(w + c[1]), g.x(w + c[2])});
        });
    g.h = Hypergraph::make(3, n + g.m + 1, {edges.begin(), edges.end()});
    return g;
}

/// Host 2-colouring on n^3/8 vertices split into n/4 parts of size n^2/2:
/// a triple is blue when inside one part or across three parts.
class BurrErdosHost {
public:
    explicit BurrErdosHost(std::size_t n) : n_(n)
    {
        if (n < 4 || n % 4) throw PreconditionError("Burr-Erdos host needs n divisible by 4, n >= 4");
        part_size_ = n * n / 2;
        parts_ = n / 4;
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t parts() const noexcept { return parts_; }
    std::size_t part_size() const noexcept { return part_size_; }
    std::size_t vertex_count() const noexcept { return parts_ * part_size_; }
    std::size_t part(std::size_t v) const { return v / part_size_; }

    bool blue(std::size_t a, std::size_t b, std::size_t c) const
    {
        const auto pa = part(a), pb = part(b), pc = part(c);
        return (pa == pb && pb == pc) || (pa != pb && pb != pc && pa != pc);
    }

    /// The red rule stated independently: exactly two vertices share a part.
    bool exactly_two_in_a_part(std::size_t a, std::size_t b, std::size_t c) const
    {
        std::map<std::size_t, int> count;
        ++count[part(a)];
        ++count[part(b)];
        ++count[part(c)];
        return std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
    }

    Colouring colouring() const;

private:
    std::size_t n_, part_size_ = 0, parts_ = 0;
};

class BurrErdosHostColouring final : public ColouringImpl {
public:
    explicit BurrErdosHostColouring(BurrErdosHost host) : host_(host) {}

    std::size_t uniformity() const override { return 3; }
    Universe universe() const override { return Universe::of_size(host_.vertex_count()); }

    ColourId evaluate(EdgeView e, Trace* trace) const override
    {
        const bool b = host_.blue(e[0].to_u64(), e[1].to_u64(), e[2].to_u64());
        if (trace) trace->push_back(std::string("burr-erdos host: ") + (b ? "blue" : "red"));
        return ColourId::base(b ? 2 : 1);
    }

    std::vector<ColourId> palette_prefix(std::size_t count) const override
    {
        if (count > 2) throw PreconditionError("palette has only 2 colours");
        std::vector<ColourId> out;
        for (std::uint32_t i = 1; i <= count; ++i) out.push_back(ColourId::base(i));
        return out;
    }

    std::uint64_t budget() const override { return 2; }
    std::string kind() const override { return "burr-erdos-host"; }
    std::vector<std::string> provenance() const override
    {
        return {"Burr-Erdos host for n = " + std::to_string(host_.n()) + ": " + std::to_string(host_.parts()) +
                " parts of " + std::to_string(host_.part_size()) + ", colour 1 red, 2 blue"};
    }

private:
    BurrErdosHost host_;
};

inline Colouring BurrErdosHost::colouring() const { return Colouring(std::make_shared<BurrErdosHostColouring>(*this)); }

inline std::pair<BurrErdosGraph, BurrErdosHost> burr_erdos_pair(std::size_t n)
{
    return {burr_erdos_graph(n), BurrErdosHost(n)};
}

struct HostScan {
    bool sampled = false;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<VertexList> first_violation;
};

namespace detail {

inline bool five_set_has_blue(const BurrErdosHost& host, std::span<const std::size_t> s)
{
    bool found = false;
    for_each_combination(5, 3, [&](std::span<const std::size_t> c) {
        found = host.blue(s[c[0]], s[c[1]], s[c[2]]);
        return !found;
    });
    return found;
}

inline void note(HostScan& scan, bool ok, std::span<const std::size_t> set)
{
    ++scan.checked;
    if (ok) return;
    ++scan.violations;
    if (!scan.first_violation) scan.first_violation = VertexList(set.begin(), set.end());
}

} // namespace detail

/// Every 5-set of host vertices must contain a blue triple.
inline HostScan scan_host_five_sets(const BurrErdosHost& host, std::optional<std::uint64_t> samples = {},
                                    std::uint64_t seed = 0)
{
    HostScan scan;
    const std::size_t nv = host.vertex_count();
    if (samples) {
        scan.sampled = true;
        scan.seed = seed;
        Rng rng(seed);
        VertexList s(5);
        for (std::uint64_t i = 0; i < *samples; ++i) {
            const auto pick = rng.subset(nv, 5);
            std::copy(pick.begin(), pick.end(), s.begin());
            detail::note(scan, detail::five_set_has_blue(host, s), s);
        }
        return scan;
    }
    const double work = static_cast<double>(binomial(nv, 5)) * 10;
    if (work > work_budget()) throw BudgetExceeded("exhaustive 5-set scan; use sampling", work, work_budget());
    for_each_combination(nv, 5, [&](std::span<const std::size_t> s) { detail::note(scan, detail::five_set_has_blue(host, s), s); });
    return scan;
}

/// No blue triple may have exactly two vertices in one part.
inline HostScan scan_host_blue_rule(const BurrErdosHost& host, std::optional<std::uint64_t> samples = {},
                                    std::uint64_t seed = 0)
{
    HostScan scan;
    const std::size_t nv = host.vertex_count();
    auto check = [&](std::span<const std::size_t> s) {
        detail::note(scan, !(host.blue(s[0], s[1], s[2]) && host.exactly_two_in_a_part(s[0], s[1], s[2])), s);
    };
    if (samples) {
        scan.sampled = true;
        scan.seed = seed;
        Rng rng(seed);
        VertexList s(3);
        for (std::uint64_t i = 0; i < *samples; ++i) {
            const auto pick = rng.subset(nv, 3);
            std::copy(pick.begin(), pick.end(), s.begin());
            check(s);
        }
        return scan;
    }
    if (static_cast<double>(binomial(nv, 3)) > work_budget())
        throw BudgetExceeded("exhaustive triple scan; use sampling", static_cast<double>(binomial(nv, 3)), work_budget());
    for_each_combination(nv, 3, check);
    return scan;
}

} // namespace ramsey
