#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ramsey/stepup.hpp"

using namespace ramsey;

namespace {

Edge edge_of(std::initializer_list<std::uint64_t> ids, std::size_t width)
{
    Edge e;
    for (auto v : ids) e.push_back(BinVertex::from_uint(v, width));
    return e;
}

std::vector<unsigned> oracle_deltas(const Edge& e)
{
    std::vector<std::uint64_t> raw;
    for (const auto& v : e) raw.push_back(v.to_u64());
    return oracle::delta_seq(raw);
}

template <class Fn>
void for_each_edge(const Colouring& c, Fn fn)
{
    const Universe u = c.universe();
    Edge e(c.uniformity());
    for_each_combination(*u.count, c.uniformity(), [&](std::span<const std::size_t> ids) {
        for (std::size_t i = 0; i < ids.size(); ++i) e[i] = u.vertex(ids[i]);
        fn(e);
    });
}

} // namespace

TEST(Partition, KThreePFive)
{
    const auto part = partition_patterns(3, 5);
    ASSERT_EQ(part.classes.size(), 5u);
    EXPECT_EQ(part.classes[0].front(), (Pattern{2, 1, 3}));
    EXPECT_EQ(part.classes[1].front(), (Pattern{3, 1, 2}));
    EXPECT_EQ(part.left_rep[2], (Pattern{2, 3, 1}));
    EXPECT_EQ(part.right_rep[2], (Pattern{1, 3, 2}));
    EXPECT_EQ(part.classes[3], (std::vector<Pattern>{{1, 2, 3}}));
    EXPECT_EQ(part.classes[4], (std::vector<Pattern>{{3, 2, 1}}));
}

TEST(Partition, Guards)
{
    EXPECT_THROW(partition_patterns(3, 6), PreconditionError);
    EXPECT_THROW(partition_patterns(2, 2), PreconditionError);
    EXPECT_THROW(partition_patterns(2, 3), PreconditionError);
    try {
        partition_patterns(3, 6);
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("C_3 = 5"), std::string::npos);
    }
}

TEST(Partition, InvariantsAcrossParameters)
{
    for (std::size_t k = 3; k <= 6; ++k)
        for (std::size_t p = 3; p <= catalan(k); p += (k >= 5 ? 7 : 1)) {
            const auto part = partition_patterns(k, p);
            ASSERT_EQ(part.classes.size(), p);
            std::set<Pattern> seen;
            std::size_t total = 0;
            for (const auto& cls : part.classes) {
                ASSERT_FALSE(cls.empty());
                for (const auto& pat : cls) seen.insert(pat);
                total += cls.size();
            }
            ASSERT_EQ(total, seen.size()) << "classes overlap";
            ASSERT_EQ(seen.size(), enumerate_patterns(k).size());
            ASSERT_EQ(part.classes[p - 2].size(), 1u);
            ASSERT_EQ(part.classes[p - 1].size(), 1u);
            for (std::size_t i = 0; i + 2 < p; ++i) {
                ASSERT_TRUE(has_left_property(part.left_rep[i]));
                ASSERT_TRUE(has_right_property(part.right_rep[i]));
                ASSERT_EQ(part.class_of(part.left_rep[i]), i + 1);
                ASSERT_EQ(part.class_of(part.right_rep[i]), i + 1);
            }
            ASSERT_EQ(partition_patterns(k, p).classes, part.classes);
        }
}

TEST(StepUp1, CasesAndFidelity)
{
    const auto base = random_colouring(3, 6, 3, 1);
    const auto part = partition_patterns(3, 5);
    const auto c = step_up_1(base, part);
    EXPECT_EQ(c.uniformity(), 4u);
    EXPECT_EQ(*c.universe().count, 64u);
    EXPECT_EQ(c.budget(), 2u * 3u + 5u - 2u);

    // 0,1,2,4 has deltas (1,2,3).
    const auto inc = edge_of({0, 1, 2, 4}, 6);
    EXPECT_EQ(c.colour(inc), ColourId::product(base.colour_of_ids(std::vector<std::uint64_t>{0, 1, 2}), 1));

    // deltas (2,1,3): vertices 0, 2, 3, 4 -> delta(0,2)=2, delta(2,3)=1, delta(3,4)=3.
    const auto cls = edge_of({0, 2, 3, 4}, 6);
    EXPECT_EQ(c.colour(cls), ColourId::cls(1));
    Trace trace;
    c.colour(cls, &trace);
    EXPECT_FALSE(trace.empty());

    std::set<ColourId> seen;
    std::size_t cases[5] = {};
    for_each_edge(c, [&](const Edge& e) {
        const auto col = c.colour_unchecked(e);
        seen.insert(col);
        const auto d = oracle_deltas(e);
        const StepCase which = step_case(c, e);
        ++cases[static_cast<int>(which)];
        if (std::is_sorted(d.begin(), d.end()) && std::adjacent_find(d.begin(), d.end()) == d.end()) {
            ASSERT_EQ(which, StepCase::increasing);
            std::vector<std::uint64_t> ids;
            for (auto x : d) ids.push_back(x - 1);
            ASSERT_EQ(col, ColourId::product(base.colour_of_ids(ids), 1));
        }
    });
    EXPECT_LE(seen.size(), c.budget());
    EXPECT_GT(cases[0], 0u);
    EXPECT_GT(cases[1], 0u);
    EXPECT_GT(cases[2], 0u);
    EXPECT_EQ(cases[3] + cases[4], 0u);
}

TEST(StepUp1, RejectsBadEdges)
{
    const auto c = step_up_1(random_colouring(3, 5, 2, 3), partition_patterns(3, 3));
    EXPECT_THROW(c.colour(edge_of({0, 1, 2}, 5)), PreconditionError);
    EXPECT_THROW(c.colour(edge_of({0, 1, 2, 3}, 6)), PreconditionError);
    EXPECT_THROW(c.colour(edge_of({0, 1, 1, 3}, 5)), PreconditionError);
    EXPECT_THROW(step_up_1(random_colouring(2, 5, 2, 3), partition_patterns(3, 3)), PreconditionError);
}

TEST(StepUp1b, AliasesAndBudget)
{
    const auto base = random_colouring(3, 5, 3, 2);
    const auto part = partition_patterns(3, 5);
    const auto c = step_up_1b(base, part);
    EXPECT_EQ(c.budget(), 3u);
    EXPECT_EQ(c.colour(edge_of({0, 2, 3, 4}, 5)), ColourId::base(1));
    const auto inc = edge_of({0, 1, 2, 4}, 5);
    EXPECT_EQ(c.colour(inc), base.colour_of_ids(std::vector<std::uint64_t>{0, 1, 2}));
    std::set<ColourId> seen;
    for_each_edge(c, [&](const Edge& e) { seen.insert(c.colour_unchecked(e)); });
    EXPECT_LE(seen.size(), 3u);
    EXPECT_THROW(step_up_1b(random_colouring(3, 5, 2, 2), partition_patterns(3, 5)), PreconditionError);
}

TEST(StepUp2, RuleAndSentinel)
{
    const auto base = random_colouring(2, 5, 2, 4);
    const auto c = step_up_2(base, 2);
    EXPECT_EQ(c.uniformity(), 4u);
    EXPECT_EQ(c.budget(), 4u);
    // deltas (1,2,1): odd positions repeat.
    EXPECT_EQ(c.colour(edge_of({0, 1, 2, 3}, 5)), ColourId::product(ColourId::base(1), 1));
    EXPECT_EQ(step_case(c, edge_of({0, 1, 2, 3}, 5)), StepCase::fallback);
    // 0,1,2,4 -> deltas (1,2,3), odd (1,3) is permutation #1.
    EXPECT_EQ(c.colour(edge_of({0, 1, 2, 4}, 5)),
              ColourId::product(base.colour_of_ids(std::vector<std::uint64_t>{0, 2}), 1));
    // 2,4,5,6 -> deltas (3,1,2), odd (3,2) is permutation #2.
    EXPECT_EQ(c.colour(edge_of({2, 4, 5, 6}, 5)),
              ColourId::product(base.colour_of_ids(std::vector<std::uint64_t>{1, 2}), 2));
    EXPECT_THROW(step_up_2(base, 3), PreconditionError);

    std::set<ColourId> seen;
    for_each_edge(c, [&](const Edge& e) { seen.insert(c.colour_unchecked(e)); });
    EXPECT_LE(seen.size(), c.budget());
}

TEST(Tower, Composition)
{
    const auto base = random_colouring(3, 6, 2, 5);
    EXPECT_EQ(tower_compose(base, {}).kind(), "random-seeded");
    const auto up = tower_compose(base, {{Step::Kind::up1, 3, 4}});
    EXPECT_EQ(up.uniformity(), 4u);
    EXPECT_EQ(*up.universe().count, 64u);
    const auto two = tower_compose(base, {{Step::Kind::up2, 3, 4}});
    EXPECT_EQ(two.uniformity(), 6u);
    EXPECT_EQ(two.budget(), 8u);

    // 64 vertices step once more into a universe of width 64.
    const auto tall = tower_compose(base, {{Step::Kind::up1, 3, 4}, {Step::Kind::up1b, 4, 5}});
    EXPECT_EQ(tall.universe().width, 64u);
    EXPECT_FALSE(tall.universe().count.has_value());
    EXPECT_EQ(tall.provenance().size(), 3u);
    std::mt19937_64 g(5);
    for (int i = 0; i < 200; ++i) {
        std::set<std::uint64_t> ids;
        while (ids.size() < 5) ids.insert(g());
        Edge e;
        for (auto x : ids) e.push_back(BinVertex::from_uint(x, 64));
        ASSERT_EQ(tall.colour(e), tall.colour(e));
    }

    try {
        tower_compose(base, {{Step::Kind::up1, 3, 4}, {Step::Kind::up1, 3, 4}});
        FAIL() << "expected an infeasible schedule";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos);
    }
    EXPECT_THROW(tower_compose(base, {{Step::Kind::up1, 3, 4}, {Step::Kind::up1, 4, 5}, {Step::Kind::up1, 5, 5}}),
                 PreconditionError);
}

TEST(Tower, Determinism)
{
    const auto c1 = tower_compose(random_colouring(3, 6, 3, 9), {{Step::Kind::up2, 3, 5}});
    const auto c2 = tower_compose(random_colouring(3, 6, 3, 9), {{Step::Kind::up2, 3, 5}});
    std::mt19937_64 g(6);
    for (int i = 0; i < 10000; ++i) {
        std::set<std::uint64_t> ids;
        while (ids.size() < 6) ids.insert(g() % 64);
        Edge e;
        for (auto x : ids) e.push_back(BinVertex::from_uint(x, 6));
        ASSERT_EQ(c1.colour(e), c2.colour(e));
        ASSERT_EQ(c1.colour(e), c1.colour(e));
    }
}

TEST(Witness, RealizedRepresentatives)
{
    const auto base = random_colouring(3, 8, 3, 7);
    const auto part = partition_patterns(3, 5);
    const auto c = step_up_1(base, part);
    // The full universe contains every class representative.
    std::vector<BinVertex> all;
    for (std::uint64_t v = 0; v < 256; ++v) all.push_back(BinVertex::from_uint(v, 8));
    const auto w = witness_p_colours(c, all);
    EXPECT_EQ(w.outcome, PColourWitness::Outcome::distinct_edges);
    EXPECT_EQ(w.edges.size(), 5u);
    std::string why;
    EXPECT_TRUE(validate_p_colour_witness(c, all, w, &why)) << why;

    const auto small = witness_p_colours(c, {all[0], all[1]});
    EXPECT_EQ(small.outcome, PColourWitness::Outcome::too_small);
    EXPECT_TRUE(validate_p_colour_witness(c, {all[0], all[1]}, small));
}

TEST(Witness, RandomSetsAlwaysRevalidate)
{
    std::mt19937_64 g(8);
    const auto base = random_colouring(3, 9, 3, 8);
    const std::vector<Colouring> cs{step_up_1(base, partition_patterns(3, 4)), step_up_1b(base, partition_patterns(3, 5)),
                                    step_up_2(base, 3)};
    for (const auto& c : cs)
        for (int trial = 0; trial < 150; ++trial) {
            std::set<std::uint64_t> ids;
            const std::size_t size = 1 + g() % 40;
            while (ids.size() < size) ids.insert(g() % 512);
            std::vector<BinVertex> vs;
            for (auto x : ids) vs.push_back(BinVertex::from_uint(x, 9));
            const auto w = witness_p_colours(c, vs);
            std::string why;
            ASSERT_TRUE(validate_p_colour_witness(c, vs, w, &why)) << c.kind() << ": " << why;
        }
}
