#pragma once

// Stepping-up colourings over delta-sequences, tower composition, and the
// p-colour witness search.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/colour.hpp"
#include "ramsey/delta.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/seqpat.hpp"

namespace ramsey {

struct PatternClassPartition {
    std::size_t k = 0;
    std::size_t p = 0;
    /// classes[i] is class i + 1. Class p - 1 is the increasing permutation and
    /// class p the decreasing one.
    std::vector<std::vector<Pattern>> classes;
    /// For the first p - 2 classes.
    std::vector<Pattern> left_rep;
    std::vector<Pattern> right_rep;

    /// 1-based class of a pattern of length k.
    std::size_t class_of(const Pattern& pat) const
    {
        const auto it = index_.find(pat);
        if (it == index_.end()) throw PreconditionError("pattern " + pat.to_string() + " is not of length k");
        return it->second;
    }

    void build_index()
    {
        index_.clear();
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (const auto& pat : classes[i]) index_.emplace(pat, i + 1);
    }

private:
    std::map<Pattern, std::size_t> index_;
};

inline PatternClassPartition partition_patterns(std::size_t k, std::size_t p)
{
    if (p < 3) throw PreconditionError("partition needs p >= 3, got " + std::to_string(p));
    if (k < 1 || k > 8) throw PreconditionError("partition supports 1 <= k <= 8");
    const std::uint64_t ck = catalan(k);
    if (p > ck)
        throw PreconditionError("p = " + std::to_string(p) + " exceeds the Catalan bound C_" + std::to_string(k) +
                                " = " + std::to_string(ck));

    std::vector<int> inc_r(k), dec_r(k);
    for (std::size_t i = 0; i < k; ++i) {
        inc_r[i] = static_cast<int>(i) + 1;
        dec_r[i] = static_cast<int>(k - i);
    }
    const Pattern inc(inc_r), dec(dec_r);

    std::vector<Pattern> both, left_only, right_only;
    for (const auto& perm : all_permutations(k)) {
        if (perm == inc || perm == dec) continue;
        const bool l = has_left_property(perm), r = has_right_property(perm);
        if (l && r) both.push_back(perm);
        else if (l) left_only.push_back(perm);
        else if (r) right_only.push_back(perm);
    }

    PatternClassPartition part;
    part.k = k;
    part.p = p;
    const std::size_t working = p - 2;
    std::set<Pattern> used{inc, dec};
    for (std::size_t i = 0; i < working; ++i) {
        if (i < both.size()) {
            part.classes.push_back({both[i]});
            part.left_rep.push_back(both[i]);
            part.right_rep.push_back(both[i]);
            used.insert(both[i]);
        } else {
            const std::size_t j = i - both.size();
            part.classes.push_back({left_only[j], right_only[j]});
            part.left_rep.push_back(left_only[j]);
            part.right_rep.push_back(right_only[j]);
            used.insert(left_only[j]);
            used.insert(right_only[j]);
        }
    }
    std::size_t next = 0;
    for (const auto& pat : enumerate_patterns(k)) {
        if (used.count(pat)) continue;
        part.classes[next].push_back(pat);
        next = (next + 1) % working;
    }
    part.classes.push_back({inc});
    part.classes.push_back({dec});
    part.build_index();
    return part;
}

namespace detail {

using DeltaBuf = boost::container::small_vector<Value, 16>;

inline std::string join_values(const DeltaBuf& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

inline bool strictly_increasing(const DeltaBuf& d)
{
    for (std::size_t i = 1; i < d.size(); ++i)
        if (!(d[i - 1] < d[i])) return false;
    return true;
}

inline bool strictly_decreasing(const DeltaBuf& d)
{
    for (std::size_t i = 1; i < d.size(); ++i)
        if (!(d[i - 1] > d[i])) return false;
    return true;
}

// Base edge {delta - 1 : delta in values}, sorted.
template <class Values>
Edge base_edge(const Values& values, const Universe& base_universe)
{
    boost::container::small_vector<Value, 16> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    Edge e;
    e.reserve(sorted.size());
    for (Value v : sorted) e.push_back(base_universe.vertex(static_cast<std::uint64_t>(v - 1)));
    return e;
}

inline Universe stepped_universe(const Colouring& base, const char* what)
{
    const Universe u = base.universe();
    if (!u.count)
        throw PreconditionError(std::string(what) + ": base universe of " + u.size_string() +
                                " vertices is too large to step up");
    if (*u.count > (std::uint64_t{1} << 20))
        throw PreconditionError(std::string(what) + ": base universe of " + std::to_string(*u.count) +
                                " vertices gives coordinates beyond the supported width");
    return Universe::cube(static_cast<std::size_t>(*u.count));
}

} // namespace detail

/// Which rule a stepped-up edge was coloured by.
enum class StepCase { increasing, decreasing, pattern_class, permutation, fallback };

inline const char* to_string(StepCase c)
{
    switch (c) {
    case StepCase::increasing: return "increasing";
    case StepCase::decreasing: return "decreasing";
    case StepCase::pattern_class: return "class";
    case StepCase::permutation: return "permutation";
    case StepCase::fallback: return "fallback";
    }
    return "?";
}

/// Colourings of K_{2^n}^(k+1) from a colouring of K_n^(k) and a pattern partition.
/// The plain variant uses 2q + p - 2 colours; the aliased variant reuses the
/// first p - 2 base colours for the classes and keeps q colours.
class StepUp1Colouring final : public ColouringImpl {
public:
    StepUp1Colouring(Colouring base, PatternClassPartition part, bool aliased)
        : base_(std::move(base)), part_(std::move(part)), aliased_(aliased)
    {
        if (part_.k != base_.uniformity())
            throw PreconditionError("partition is for k = " + std::to_string(part_.k) + " but the base is " +
                                    std::to_string(base_.uniformity()) + "-uniform");
        universe_ = detail::stepped_universe(base_, aliased ? "up1b" : "up1");
        base_universe_ = base_.universe();
        if (aliased_) {
            if (base_.budget() < part_.p - 2)
                throw PreconditionError("up1b needs q >= p - 2; q = " + std::to_string(base_.budget()) +
                                        ", p = " + std::to_string(part_.p));
            aliases_ = base_.palette_prefix(part_.p - 2);
        }
    }

    std::size_t uniformity() const override { return part_.k + 1; }
    Universe universe() const override { return universe_; }

    ColourId evaluate(EdgeView edge, Trace* trace) const override
    {
        detail::DeltaBuf d;
        delta_values(edge, d);
        return evaluate_deltas(d, trace, nullptr);
    }

    /// Colour from the delta-sequence of an edge; `which` receives the case.
    ColourId evaluate_deltas(const detail::DeltaBuf& d, Trace* trace, StepCase* which) const
    {
        const bool inc = detail::strictly_increasing(d);
        const bool dec = !inc && detail::strictly_decreasing(d);
        if (inc || dec) {
            const Edge be = detail::base_edge(d, base_universe_);
            if (trace)
                trace->push_back(kind() + ": deltas " + detail::join_values(d) + " " + (inc ? "increasing" : "decreasing") +
                                 ", base edge " + edge_string(be));
            if (which) *which = inc ? StepCase::increasing : StepCase::decreasing;
            const ColourId b = base_.colour_unchecked(be, trace);
            if (aliased_) return b;
            return ColourId::product(b, inc ? 1 : 2);
        }
        const std::size_t cls = part_.class_of(pattern_of(std::span<const Value>(d.data(), d.size())));
        if (trace) trace->push_back(kind() + ": deltas " + detail::join_values(d) + " in class " + std::to_string(cls));
        if (which) *which = StepCase::pattern_class;
        if (aliased_) return aliases_[cls - 1];
        return ColourId::cls(static_cast<std::uint32_t>(cls));
    }

    std::vector<ColourId> palette_prefix(std::size_t count) const override
    {
        if (aliased_) return base_.palette_prefix(count);
        const std::uint64_t q = base_.budget();
        std::vector<ColourId> out;
        const auto base_palette = base_.palette_prefix(static_cast<std::size_t>(std::min<std::uint64_t>(q, (count + 1) / 2)));
        for (const auto& b : base_palette) {
            for (std::uint32_t tag : {1u, 2u})
                if (out.size() < count) out.push_back(ColourId::product(b, tag));
        }
        for (std::uint32_t i = 1; out.size() < count && i <= part_.p - 2; ++i) out.push_back(ColourId::cls(i));
        if (out.size() < count) throw PreconditionError("palette has only " + std::to_string(budget()) + " colours");
        return out;
    }

    std::uint64_t budget() const override
    {
        const std::uint64_t q = base_.budget();
        return aliased_ ? q : sat_add(sat_mul(2, q), part_.p - 2);
    }

    std::string kind() const override { return aliased_ ? "stepped-up-1b" : "stepped-up-1"; }

    std::vector<std::string> provenance() const override
    {
        auto out = base_.provenance();
        out.push_back(std::string(aliased_ ? "up1b" : "up1") + " k=" + std::to_string(part_.k) +
                      " p=" + std::to_string(part_.p) + " -> K_" + universe_.size_string() + "^(" +
                      std::to_string(part_.k + 1) + "), budget " + std::to_string(budget()));
        return out;
    }

    const Colouring& base() const noexcept { return base_; }
    const PatternClassPartition& partition() const noexcept { return part_; }
    bool aliased() const noexcept { return aliased_; }

private:
    static std::string edge_string(const Edge& e)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].to_string();
        return s + "}";
    }

    Colouring base_;
    PatternClassPartition part_;
    bool aliased_;
    Universe universe_;
    Universe base_universe_;
    std::vector<ColourId> aliases_;
};

/// Colouring of K_{2^n}^(2k) from a colouring of K_n^(k): odd-position deltas
/// forming the i-th permutation (lexicographic order, i <= p) give (base, i).
class StepUp2Colouring final : public ColouringImpl {
public:
    StepUp2Colouring(Colouring base, std::size_t p) : base_(std::move(base)), p_(p)
    {
        const std::size_t k = base_.uniformity();
        if (k > kMaxEnumeratedPermutationLength) throw PreconditionError("up2 supports k <= 10");
        if (p < 1 || p > factorial(k))
            throw PreconditionError("up2 needs 1 <= p <= k! = " + std::to_string(factorial(k)));
        universe_ = detail::stepped_universe(base_, "up2");
        base_universe_ = base_.universe();
        auto perms = all_permutations(k);
        perms.resize(p);
        for (std::size_t i = 0; i < perms.size(); ++i) perm_index_.emplace(perms[i], i + 1);
        perms_ = std::move(perms);
        sentinel_ = ColourId::product(base_.palette_prefix(1).front(), 1);
    }

    std::size_t uniformity() const override { return 2 * base_.uniformity(); }
    Universe universe() const override { return universe_; }

    ColourId evaluate(EdgeView edge, Trace* trace) const override
    {
        detail::DeltaBuf d;
        delta_values(edge, d);
        return evaluate_deltas(d, trace, nullptr);
    }

    ColourId evaluate_deltas(const detail::DeltaBuf& d, Trace* trace, StepCase* which) const
    {
        detail::DeltaBuf odd;
        for (std::size_t i = 0; i < d.size(); i += 2) odd.push_back(d[i]);
        const Pattern pat = pattern_of(std::span<const Value>(odd.data(), odd.size()));
        const auto it = pat.is_permutation() ? perm_index_.find(pat) : perm_index_.end();
        if (it == perm_index_.end()) {
            if (trace)
                trace->push_back("up2: odd deltas " + detail::join_values(odd) + " outside the first " +
                                 std::to_string(p_) + " permutations, sentinel");
            if (which) *which = StepCase::fallback;
            return sentinel_;
        }
        const Edge be = detail::base_edge(odd, base_universe_);
        if (trace)
            trace->push_back("up2: odd deltas " + detail::join_values(odd) + " form permutation #" +
                             std::to_string(it->second));
        if (which) *which = StepCase::permutation;
        return ColourId::product(base_.colour_unchecked(be, trace), static_cast<std::uint32_t>(it->second));
    }

    std::vector<ColourId> palette_prefix(std::size_t count) const override
    {
        std::vector<ColourId> out;
        const auto base_palette = base_.palette_prefix(
            static_cast<std::size_t>(std::min<std::uint64_t>(base_.budget(), (count + p_ - 1) / p_)));
        for (const auto& b : base_palette)
            for (std::uint32_t i = 1; i <= p_ && out.size() < count; ++i) out.push_back(ColourId::product(b, i));
        if (out.size() < count) throw PreconditionError("palette has only " + std::to_string(budget()) + " colours");
        return out;
    }

    std::uint64_t budget() const override { return sat_mul(p_, base_.budget()); }
    std::string kind() const override { return "stepped-up-2"; }

    std::vector<std::string> provenance() const override
    {
        auto out = base_.provenance();
        out.push_back("up2 k=" + std::to_string(base_.uniformity()) + " p=" + std::to_string(p_) + " -> K_" +
                      universe_.size_string() + "^(" + std::to_string(uniformity()) + "), budget " +
                      std::to_string(budget()));
        return out;
    }

    const Colouring& base() const noexcept { return base_; }
    std::size_t p() const noexcept { return p_; }
    const std::vector<Pattern>& permutations() const noexcept { return perms_; }
    const ColourId& sentinel() const noexcept { return sentinel_; }

private:
    Colouring base_;
    std::size_t p_;
    Universe universe_;
    Universe base_universe_;
    std::vector<Pattern> perms_;
    std::map<Pattern, std::size_t> perm_index_;
    ColourId sentinel_;
};

inline Colouring step_up_1(const Colouring& base, const PatternClassPartition& part)
{
    return Colouring(std::make_shared<StepUp1Colouring>(base, part, false));
}

inline Colouring step_up_1b(const Colouring& base, const PatternClassPartition& part)
{
    return Colouring(std::make_shared<StepUp1Colouring>(base, part, true));
}

inline Colouring step_up_2(const Colouring& base, std::size_t p)
{
    return Colouring(std::make_shared<StepUp2Colouring>(base, p));
}

/// Case that colours an edge of a stepped-up colouring.
inline StepCase step_case(const Colouring& c, EdgeView sorted_edge)
{
    detail::DeltaBuf d;
    delta_values(sorted_edge, d);
    StepCase which{};
    if (const auto* s1 = c.as<StepUp1Colouring>()) s1->evaluate_deltas(d, nullptr, &which);
    else if (const auto* s2 = c.as<StepUp2Colouring>()) s2->evaluate_deltas(d, nullptr, &which);
    else throw PreconditionError("step_case needs a stepped-up colouring");
    return which;
}

// ---------------------------------------------------------------------------
// Schedules

struct Step {
    enum class Kind { up1, up1b, up2 };
    Kind kind;
    std::size_t k;  // uniformity the step consumes
    std::size_t p;
};

inline std::string to_string(const Step& s)
{
    const char* name = s.kind == Step::Kind::up1 ? "up1" : s.kind == Step::Kind::up1b ? "up1b" : "up2";
    return std::string(name) + " " + std::to_string(s.k) + " " + std::to_string(s.p);
}

/// Applies each step in order. A failing step is reported with its position.
inline Colouring tower_compose(Colouring base, const std::vector<Step>& schedule)
{
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const Step& s = schedule[i];
        try {
            if (s.k != base.uniformity())
                throw PreconditionError("step consumes " + std::to_string(s.k) + "-uniform colourings but the input is " +
                                        std::to_string(base.uniformity()) + "-uniform");
            switch (s.kind) {
            case Step::Kind::up1: base = step_up_1(base, partition_patterns(s.k, s.p)); break;
            case Step::Kind::up1b: base = step_up_1b(base, partition_patterns(s.k, s.p)); break;
            case Step::Kind::up2: base = step_up_2(base, s.p); break;
            }
        } catch (const PreconditionError& e) {
            throw PreconditionError("infeasible schedule at step " + std::to_string(i + 1) + " (" + to_string(s) +
                                    "): " + e.what());
        }
    }
    return base;
}

// ---------------------------------------------------------------------------
// p-colour witnesses

struct ColouredEdge {
    Edge vertices;
    ColourId colour;
};

struct PColourWitness {
    enum class Outcome { distinct_edges, homogeneous_branch, lifted_branch, too_small };
    Outcome outcome = Outcome::too_small;
    std::size_t p = 0;
    std::vector<ColouredEdge> edges;  // distinct colours when outcome is distinct_edges
    Sequence deltas;                  // delta-sequence of the queried set
    IndexSet branch_indices;          // monotone run (homogeneous) or empty
    std::size_t branch_colours = 0;   // distinct colours found in the branch
    std::string explanation;
};

inline const char* to_string(PColourWitness::Outcome o)
{
    switch (o) {
    case PColourWitness::Outcome::distinct_edges: return "distinct_edges";
    case PColourWitness::Outcome::homogeneous_branch: return "homogeneous_branch";
    case PColourWitness::Outcome::lifted_branch: return "lifted_branch";
    case PColourWitness::Outcome::too_small: return "too_small";
    }
    return "?";
}

namespace detail {

class ColourCollector {
public:
    ColourCollector(const Colouring& c, std::size_t p) : c_(c), p_(p) {}

    bool add(Edge e)
    {
        if (full()) return true;
        ColourId col = c_.colour(e);
        if (seen_.insert(col).second) edges_.push_back({std::move(e), std::move(col)});
        return full();
    }

    bool full() const { return edges_.size() >= p_; }
    std::vector<ColouredEdge>& edges() { return edges_; }
    std::size_t distinct() const { return seen_.size(); }

private:
    const Colouring& c_;
    std::size_t p_;
    std::set<ColourId> seen_;
    std::vector<ColouredEdge> edges_;
};

} // namespace detail

/// Colours a witness must exhibit: p for up1 and up2, p - 2 for up1b.
inline std::size_t witness_target(const Colouring& c)
{
    if (const auto* s1 = c.as<StepUp1Colouring>()) return s1->partition().p - (s1->aliased() ? 2 : 0);
    if (const auto* s2 = c.as<StepUp2Colouring>()) return s2->p();
    throw PreconditionError("witness_p_colours needs a stepped-up colouring");
}

/// Looks for p edges inside `vertices` with pairwise distinct colours under a
/// stepped-up colouring, following the dichotomy of its construction. When the
/// construction's first branch fails, reports the branch that applies instead.
inline PColourWitness witness_p_colours(const Colouring& c, std::vector<BinVertex> vertices,
                                        std::size_t max_combinations = 5000)
{
    PColourWitness w;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    const Universe u = c.universe();
    for (const auto& v : vertices)
        if (!u.contains(v)) throw PreconditionError("vertex " + v.to_string() + " is outside the universe");

    const auto* s1 = c.as<StepUp1Colouring>();
    const auto* s2 = c.as<StepUp2Colouring>();
    w.p = witness_target(c);

    if (vertices.size() < c.uniformity()) {
        w.outcome = PColourWitness::Outcome::too_small;
        w.explanation = std::to_string(vertices.size()) + " vertices cannot hold a " +
                        std::to_string(c.uniformity()) + "-edge";
        return w;
    }
    const DeltaSeq ds = delta_sequence(vertices);
    w.deltas = ds.deltas;
    detail::ColourCollector got(c, w.p);

    if (s2) {
        const std::size_t k = s2->base().uniformity();
        for (std::size_t i = 0; i < s2->p(); ++i) {
            const auto hit = contains_separated_permutation(ds.deltas, s2->permutations()[i]);
            if (!hit) {
                w.outcome = PColourWitness::Outcome::lifted_branch;
                w.branch_colours = got.distinct();
                w.explanation = "delta-sequence (" + std::to_string(distinct_values(ds.deltas)) +
                                " distinct values) has no separated copy of permutation #" + std::to_string(i + 1) +
                                " " + s2->permutations()[i].to_string() + " of [" + std::to_string(k) + "]";
                return w;
            }
            got.add(realize_separated(ds, *hit));
        }
        w.outcome = PColourWitness::Outcome::distinct_edges;
        w.edges = std::move(got.edges());
        return w;
    }

    // Max-induced copies of a member of each working class give c_1 .. c_{p-2}.
    const auto& part = s1->partition();
    const std::size_t k = part.k;
    for (std::size_t i = 0; i + 2 < part.p; ++i) {
        std::vector<Pattern> tries{part.left_rep[i], part.right_rep[i]};
        for (const auto& pat : part.classes[i]) tries.push_back(pat);
        for (const auto& pat : tries) {
            if (auto hit = contains_max_induced(ds.deltas, pat)) {
                got.add(realize_max_induced(ds, *hit));
                break;
            }
        }
    }
    // Monotone max-induced runs: every k-subset of a run is again max-induced.
    IndexSet best_run;
    std::vector<IndexSet> runs;
    for (bool increasing : {true, false})
        runs.push_back(longest_directed_max_induced(ds.deltas, increasing, Monotone::strict).indices);
    for (const auto& run : runs) {
        if (run.size() > best_run.size()) best_run = run;
        if (run.size() < k || got.full()) continue;
        std::size_t tried = 0;
        for_each_combination(run.size(), k, [&](std::span<const std::size_t> pick) {
            IndexSet ix;
            for (std::size_t j : pick) ix.push_back(run[j]);
            got.add(realize_max_induced(ds, ix));
            return !got.full() && ++tried < max_combinations;
        });
    }

    if (got.full()) {
        w.outcome = PColourWitness::Outcome::distinct_edges;
        w.edges = std::move(got.edges());
        return w;
    }
    w.outcome = PColourWitness::Outcome::homogeneous_branch;
    w.branch_indices = best_run;
    w.branch_colours = got.distinct();
    w.edges = std::move(got.edges());
    w.explanation = "some class has no max-induced representative and the longest strictly monotone max-induced run "
                    "has length " + std::to_string(best_run.size()) + "; only " + std::to_string(w.branch_colours) +
                    " colours reached";
    return w;
}

/// Re-validates a witness against the colouring and the queried vertex set.
inline bool validate_p_colour_witness(const Colouring& c, std::vector<BinVertex> vertices, const PColourWitness& w,
                                      std::string* why = nullptr)
{
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::set<ColourId> colours;
    for (const auto& e : w.edges) {
        for (const auto& v : e.vertices)
            if (!std::binary_search(vertices.begin(), vertices.end(), v))
                return fail("edge vertex " + v.to_string() + " is outside the queried set");
        if (c.colour(e.vertices) != e.colour) return fail("edge colour does not re-evaluate");
        colours.insert(e.colour);
    }
    if (colours.size() != w.edges.size()) return fail("edge colours are not pairwise distinct");
    if (w.p != witness_target(c)) return fail("recorded p differs from the colouring's target");
    switch (w.outcome) {
    case PColourWitness::Outcome::distinct_edges:
        if (w.edges.size() < w.p) return fail("fewer than p edges");
        return true;
    case PColourWitness::Outcome::too_small:
        if (vertices.size() >= c.uniformity()) return fail("set is not too small");
        return true;
    case PColourWitness::Outcome::homogeneous_branch: {
        const Sequence d = delta_sequence(vertices).deltas;
        if (d != w.deltas) return fail("delta-sequence mismatch");
        if (!w.branch_indices.empty()) {
            if (!is_max_induced(d, w.branch_indices)) return fail("branch run is not max-induced");
            if (!is_homogeneous(values_at(d, w.branch_indices), Monotone::strict))
                return fail("branch run is not strictly monotone");
        }
        return true;
    }
    case PColourWitness::Outcome::lifted_branch: {
        const auto* s2 = c.as<StepUp2Colouring>();
        if (!s2) return fail("lifted branch on a non-up2 colouring");
        const Sequence d = delta_sequence(vertices).deltas;
        if (d != w.deltas) return fail("delta-sequence mismatch");
        for (const auto& perm : s2->permutations())
            if (!contains_separated_permutation(d, perm)) return true;
        return fail("every permutation has a separated copy; the branch does not apply");
    }
    }
    return fail("unknown outcome");
}

} // namespace ramsey
