#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsey/rainbow.hpp"

using namespace ramsey;

namespace {

Colouring pentagon()
{
    return tabulate_from(2, 5, 2, [](std::span<const std::size_t> e) {
        const std::size_t gap = e[1] - e[0];
        return static_cast<std::uint16_t>(gap == 1 || gap == 4 ? 1 : 2);
    });
}

// Brute-force monochromatic K_t search on a tabulated 2-colouring.
bool has_mono_clique(const Colouring& c, std::size_t n, std::size_t t)
{
    const std::size_t k = c.uniformity();
    bool found = false;
    for_each_combination(n, t, [&](std::span<const std::size_t> set) {
        std::set<std::uint16_t> seen;
        for_each_combination(t, k, [&](std::span<const std::size_t> pick) {
            std::vector<std::uint64_t> ids;
            for (auto i : pick) ids.push_back(set[i]);
            seen.insert(c.as<TabulatedColouring>()->at_ids(ids));
        });
        if (seen.size() == 1) found = true;
        return !found;
    });
    return found;
}

} // namespace

TEST(VerifyRainbow, Pentagon)
{
    const auto rep = verify_rainbow(pentagon(), 3, 2);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.sets_checked, 10u);
    EXPECT_EQ(rep.histogram.at(2), 10u);
    EXPECT_EQ(rep.coverage, RainbowReport::Coverage::exhaustive);
}

TEST(VerifyRainbow, OneColouringFails)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto c = tabulate_from(k, 6, 1, [](auto) { return std::uint16_t{1}; });
        const auto rep = verify_rainbow(c, k + 1, 2);
        ASSERT_FALSE(rep.pass);
        ASSERT_TRUE(rep.violation);
        EXPECT_EQ(rep.violation->size(), k + 1);
        EXPECT_EQ(rep.violation->front().to_u64(), 0u);  // lexicographically least
        EXPECT_TRUE(violation_revalidates(c, rep));
    }
}

TEST(VerifyRainbow, Guards)
{
    EXPECT_THROW(verify_rainbow(pentagon(), 1, 2), PreconditionError);
    const auto big = random_colouring(2, 200, 3, 1);
    EXPECT_THROW(verify_rainbow(big, 10, 2, VerifyMode::exhaustive(1e6)), BudgetExceeded);
    const auto rep = verify_rainbow(big, 10, 2, VerifyMode::sample(50, 9));
    EXPECT_EQ(rep.coverage, RainbowReport::Coverage::sampled);
    EXPECT_EQ(rep.sets_checked, 50u);
    EXPECT_EQ(rep.seed, 9u);
}

TEST(VerifyRainbow, MonochromaticEquivalence)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t k = 2 + seed % 2, n = 7 + seed % 3, t = k + 1 + seed % 2;
        const auto c = random_colouring(k, n, 2, seed);
        const auto rep = verify_rainbow(c, t, 2);
        ASSERT_EQ(rep.pass, !has_mono_clique(c, n, t)) << "seed " << seed;
        if (!rep.pass) {
            ASSERT_TRUE(violation_revalidates(c, rep));
        }
    }
}

TEST(VerifyRainbow, ExhaustiveMatchesBruteForceAndIsReproducible)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = random_colouring(3, 9, 4, 100 + seed);
        const auto a = verify_rainbow(c, 5, 4), b = verify_rainbow(c, 5, 4);
        EXPECT_EQ(a.pass, b.pass);
        EXPECT_EQ(a.histogram, b.histogram);
        std::map<std::size_t, std::uint64_t> hist;
        for_each_combination(9, 5, [&](std::span<const std::size_t> set) {
            std::set<ColourId> seen;
            for_each_combination(5, 3, [&](std::span<const std::size_t> pick) {
                std::vector<std::uint64_t> ids;
                for (auto i : pick) ids.push_back(set[i]);
                seen.insert(c.colour_of_ids(ids));
            });
            ++hist[seen.size()];
        });
        EXPECT_EQ(a.histogram, hist);
    }
}

TEST(FirstMoment, Examples)
{
    EXPECT_DOUBLE_EQ(first_moment_params(3, 2, 5).epsilon, 1.0 / 12);
    const auto fp = first_moment_params(2, 2, 8);
    EXPECT_DOUBLE_EQ(fp.epsilon, 0.25);
    EXPECT_EQ(fp.n, 4u);
    EXPECT_EQ(first_moment_params(2, 3, 5).t0, 9u);
    EXPECT_TRUE(first_moment_params(3, 2, 100).capped);
}

TEST(FirstMoment, ExpectedBadSetsBelowOne)
{
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t q = 2; q <= 8; ++q) {
            const std::size_t t0 = first_moment_params(k, q, 1).t0;
            for (std::size_t t = t0 + 1; t <= t0 + 20; ++t) {
                const auto fp = first_moment_params(k, q, t);
                if (fp.capped) continue;
                EXPECT_LT(log_expected_bad_sets(static_cast<double>(fp.n), k, q, t), 0.0)
                    << "k=" << k << " q=" << q << " t=" << t;
            }
        }
}

TEST(FirstMoment, ThresholdTooSmallForUniformityFour)
{
    // t0 = eq does not yet make the expectation small at k = 4, q = 2.
    const auto fp = first_moment_params(4, 2, 7);
    EXPECT_EQ(fp.n, 142u);
    EXPECT_GT(log_expected_bad_sets(static_cast<double>(fp.n), 4, 2, 7), 0.0);
    const auto later = first_moment_params(4, 2, 9);
    EXPECT_LT(log_expected_bad_sets(static_cast<double>(later.n), 4, 2, 9), 0.0);
}

TEST(RandomSearch, FindsDeskScaleColouring)
{
    // Success is expected statistically, so we only require most seeds to succeed.
    int successes = 0;
    for (std::uint64_t seed : {1u, 1000u, 2000u}) {
        const auto r = search_random_rainbow(3, 10, 3, 6, 3, 100, seed);
        if (!r.colouring) continue;
        ++successes;
        EXPECT_TRUE(verify_rainbow(*r.colouring, 6, 3).pass);
        EXPECT_EQ(r.seed_used, seed + r.attempts - 1);
        EXPECT_EQ(r.colouring->kind(), "random-seeded");
    }
    EXPECT_GE(successes, 2);
}

TEST(RandomSearch, Guards)
{
    EXPECT_THROW(search_random_rainbow(3, 10, 3, 2, 2, 5, 0), PreconditionError);
    const auto none = search_random_rainbow(2, 6, 1, 3, 2, 20, 0);
    EXPECT_FALSE(none.colouring);
}

TEST(ExactOracle, RamseyThreeThree)
{
    const auto five = exact_rainbow_exists(2, 5, 2, 3, 2);
    ASSERT_TRUE(five.exists);
    ASSERT_TRUE(five.witness);
    EXPECT_TRUE(verify_rainbow(*five.witness, 3, 2).pass);
    EXPECT_FALSE(exact_rainbow_exists(2, 6, 2, 3, 2).exists);
    EXPECT_TRUE(exact_rainbow_exists(2, 2, 2, 3, 2).exists);
}

TEST(ExactOracle, MonotoneAndConsistent)
{
    struct Case {
        std::size_t k, q, t, p;
    };
    for (const auto& cs : {Case{2, 2, 3, 2}, Case{2, 3, 3, 2}, Case{2, 3, 3, 3}, Case{3, 2, 4, 2}, Case{2, 2, 4, 2}}) {
        bool prev = true;
        for (std::size_t n = cs.t; n <= 8; ++n) {
            if (binomial(n, cs.k) > 64) break;
            ExactResult r;
            try {
                r = exact_rainbow_exists(cs.k, n, cs.q, cs.t, cs.p, 5e6);
            } catch (const BudgetExceeded&) {
                break;
            }
            if (!prev) {
                ASSERT_FALSE(r.exists) << "monotonicity broken at n=" << n;
            }
            if (r.exists) {
                ASSERT_TRUE(verify_rainbow(*r.witness, cs.t, cs.p).pass);
            }
            prev = r.exists;
        }
    }
}

TEST(ExactOracle, AgreesWithBruteForceOnTinyCases)
{
    // q^{C(n,k)} enumeration without symmetry breaking.
    auto brute = [](std::size_t k, std::size_t n, std::size_t q, std::size_t t, std::size_t p) {
        const std::size_t m = binomial(n, k);
        std::vector<std::uint16_t> table(m, 1);
        while (true) {
            if (verify_rainbow(make_tabulated(k, n, static_cast<std::uint32_t>(q), table), t, p).pass) return true;
            std::size_t i = 0;
            while (i < m && table[i] == q) table[i++] = 1;
            if (i == m) return false;
            ++table[i];
        }
    };
    EXPECT_EQ(exact_rainbow_exists(2, 5, 2, 3, 2).exists, brute(2, 5, 2, 3, 2));
    EXPECT_EQ(exact_rainbow_exists(2, 4, 3, 3, 3).exists, brute(2, 4, 3, 3, 3));
    EXPECT_EQ(exact_rainbow_exists(2, 5, 3, 4, 3).exists, brute(2, 5, 3, 4, 3));
    EXPECT_EQ(exact_rainbow_exists(3, 5, 2, 4, 2).exists, brute(3, 5, 2, 4, 2));
}
