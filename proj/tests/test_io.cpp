#include <gtest/gtest.h>

#include "ramsey/io.hpp"
#include "ramsey/report.hpp"

using namespace ramsey;

TEST(IoSequence, RoundTrip)
{
    const Sequence s{3, 1, 4, 1, 5};
    EXPECT_EQ(io::parse_sequence(io::format_sequence(s)), s);
    EXPECT_EQ(io::parse_sequence("# comment\n1 2\n 3\n"), (Sequence{1, 2, 3}));
    try {
        io::parse_sequence("1 2\n3 x4\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(IoVertexSet, RoundTripAndErrors)
{
    const std::vector<BinVertex> vs{BinVertex::from_uint(3, 70), BinVertex::parse("590295810358705651712", 70)};
    const auto back = io::parse_vertex_set(io::format_vertex_set(vs, 70));
    EXPECT_EQ(back.width, 70u);
    EXPECT_EQ(back.vertices, vs);
    EXPECT_THROW(io::parse_vertex_set("5 6\n"), ParseError);
    try {
        io::parse_vertex_set("m=3\n1\n9\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(IoHypergraph, RoundTripAndErrors)
{
    const auto g = burr_erdos_graph(4).h;
    const auto back = io::parse_hypergraph(io::format_hypergraph(g));
    EXPECT_EQ(back.edges, g.edges);
    EXPECT_EQ(back.vertex_count, g.vertex_count);
    const auto coloured = io::parse_hypergraph("3 5 2\n0 1 2 : 1\n2 3 4 : 2\n");
    EXPECT_EQ(coloured.colours, (std::vector<std::uint32_t>{1, 2}));
    EXPECT_THROW(io::parse_hypergraph("3 5 2\n0 1 2\n"), ParseError);
    EXPECT_THROW(io::parse_hypergraph("3 5 1\n0 1\n"), ParseError);
    EXPECT_THROW(io::parse_hypergraph("3 5 2\n0 1 2 : 1\n2 3 4\n"), ParseError);
    try {
        io::parse_hypergraph("2 4 1\n0 7\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(IoColouring, RoundTripAndErrors)
{
    const auto c = random_colouring(3, 7, 4, 2);
    const auto back = io::parse_colouring(io::format_colouring(c));
    EXPECT_EQ(back.as<TabulatedColouring>()->table(), c.as<TabulatedColouring>()->table());
    EXPECT_THROW(io::parse_colouring("2 3 2\n0 1 1\n0 2 1\n"), ParseError);              // missing edge
    EXPECT_THROW(io::parse_colouring("2 3 2\n0 1 1\n1 0 1\n0 2 1\n1 2 2\n"), ParseError);  // repeated
    EXPECT_THROW(io::parse_colouring("2 3 2\n0 1 3\n0 2 1\n1 2 2\n"), ParseError);       // colour > q
    EXPECT_NO_THROW(io::parse_colouring("2 3 2\n1 0 1\n0 2 1\n1 2 2\n"));
    EXPECT_THROW(io::format_colouring(step_up_2(c, 2)), PreconditionError);
}

TEST(IoSchedule, ParseFormatAndLoad)
{
    const auto s = io::parse_schedule("# tower\nbase random 3 6 3 11\nup1 3 3\nup2 4 2\n");
    ASSERT_TRUE(s.base);
    EXPECT_EQ(s.base->n, 6u);
    ASSERT_EQ(s.steps.size(), 2u);
    EXPECT_EQ(s.steps[1].kind, Step::Kind::up2);
    EXPECT_EQ(io::format_schedule(s), "base random 3 6 3 11\nup1 3 3\nup2 4 2\n");
    const auto c = tower_compose(io::load_base(*s.base), s.steps);
    EXPECT_EQ(c.uniformity(), 8u);

    try {
        io::parse_schedule("up1 3 3\nup9 2 2\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 1u);
    }
    EXPECT_THROW(io::parse_schedule("up1 3\n"), ParseError);
    EXPECT_THROW(io::parse_schedule("up1 3 3\nbase random 3 6 3 1\n"), ParseError);
    EXPECT_THROW(io::parse_schedule("up2 3 -1\n"), ParseError);
}

TEST(Report, WitnessRoundTrips)
{
    const Witness w{Witness::Kind::left, {1, 3, 4}, {2, 1, 3}, Pattern{2, 1, 3}};
    const auto back = report::witness_from_json(report::to_json(w));
    EXPECT_EQ(back.indices, w.indices);
    EXPECT_EQ(back.values, w.values);
    EXPECT_EQ(back.pattern, w.pattern);

    const auto c = random_colouring(3, 81, 2, 4);
    const auto res = find_mono_hedgehog(c, 3);
    ASSERT_TRUE(res.embedding);
    const auto emb = report::embedding_from_json(nlohmann::ordered_json::parse(report::to_json(*res.embedding).dump()));
    EXPECT_TRUE(validate_hedgehog_embedding(c, emb));

    const auto env = report::envelope("x", {{"seed", report::num(std::uint64_t{18446744073709551615u})}});
    EXPECT_EQ(env["schema"], 1);
    EXPECT_EQ(env["config"]["seed"], "18446744073709551615");
    EXPECT_EQ(report::to_u64(env["config"]["seed"]), 18446744073709551615u);
    EXPECT_THROW(report::to_u64(nlohmann::ordered_json("-3")), Error);
}

TEST(Report, PColourWitnessRoundTrip)
{
    const auto base = random_colouring(3, 10, 3, 5);
    const auto c = step_up_2(base, 3);
    Rng rng(1);
    std::vector<BinVertex> vs;
    for (auto id : rng.subset(1024, 40)) vs.push_back(BinVertex::from_uint(id, 10));
    const auto w = witness_p_colours(c, vs);
    const auto back = report::p_colour_witness_from_json(report::to_json(w), 10);
    EXPECT_EQ(back.outcome, w.outcome);
    EXPECT_EQ(back.edges.size(), w.edges.size());
    EXPECT_TRUE(validate_p_colour_witness(c, vs, back));
}
