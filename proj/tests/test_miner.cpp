#include <sofia/miner.hpp>
#include <sofia/oracle.hpp>

#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace sofia;
using testing::example_dataset;
using testing::tids;

namespace {

std::vector<Tidset> extents_of(const MiningResult& r)
{
    std::vector<Tidset> out;
    for (const auto& p : r.patterns) {
        out.push_back(p.extent);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("adjust_theta")
{
    const std::vector<double> v{5, 4, 4, 3, 1};
    CHECK(adjust_theta(v, 0.0, 3) == 3);
    CHECK(adjust_theta(v, 0.0, 2) == 4);
    CHECK(adjust_theta(v, 0.0, 1) == 4);
    CHECK(adjust_theta(v, 0.0, 5) == 0);
    CHECK(adjust_theta(v, 2.0, 3) == 3);
    CHECK(adjust_theta(v, 3.0, 3) == 3);
    const std::vector<double> ties{4, 4, 4};
    CHECK(adjust_theta(ties, 0.0, 2) == 4);
    CHECK(adjust_theta(ties, 0.0, 3) == 0);
    CHECK_THROWS_AS(adjust_theta(v, 0.0, 0), std::invalid_argument);
}

TEST_CASE("prune_patterns drops values at the threshold")
{
    const auto ds = example_dataset();
    std::vector<PatternEntry> ps{
        {tids(ds, {1}), {MeasureKind::delta, 1}, 1},
        {tids(ds, {1, 2, 3, 4}), {MeasureKind::delta, 3}, 4},
    };
    prune_patterns(ps, 1.0);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].support == 4);
}

TEST_CASE("theta_sofia on the worked example")
{
    const auto ds = example_dataset();
    const auto chain = build_chain(ds, ChainPolicy::input_order);

    auto r = theta_sofia(ds, chain, MeasureKind::delta, 2.0);
    REQUIRE(r.patterns.size() == 1);
    CHECK(r.patterns[0].extent == tids(ds, {1, 2, 3, 4}));
    CHECK(r.patterns[0].measure.value == 3);
    CHECK(r.patterns[0].support == 4);

    CHECK(theta_sofia(ds, chain, MeasureKind::delta, 5.0).patterns.empty());
    CHECK(theta_sofia(ds, chain, MeasureKind::delta, 0.0).patterns.size() == 7);
}

TEST_CASE("step trace of the worked example")
{
    const auto ds = example_dataset();
    const auto chain = build_chain(ds, ChainPolicy::input_order);
    std::map<std::size_t, double> top_delta;
    std::map<std::size_t, std::vector<PatternEntry>> generated;
    MinerOptions opts;
    opts.verify = true;
    opts.on_step = [&](const StepEvent& ev) {
        generated[ev.step].assign(ev.generated.begin(), ev.generated.end());
        for (const auto& p : ev.generated) {
            if (p.extent == ds.all_transactions()) {
                top_delta[ev.step] = p.measure.value;
            }
        }
    };
    const auto r = theta_sofia(ds, chain, MeasureKind::delta, 1.0, opts);

    CHECK(top_delta[0] == 5);
    CHECK(top_delta[1] == 4);
    CHECK(top_delta[2] == 4);
    CHECK(top_delta[3] == 1);

    // Step 1 spawns {t1} with Δ 1, which θ = 1 prunes.
    bool saw_t1 = false;
    for (const auto& p : generated[1]) {
        if (p.extent == tids(ds, {1})) {
            saw_t1 = true;
            CHECK(p.measure.value == 1);
        }
    }
    CHECK(saw_t1);

    bool saw_1234 = false;
    for (const auto& p : generated[3]) {
        if (p.extent == tids(ds, {1, 2, 3, 4})) {
            saw_1234 = true;
            CHECK(p.measure.value == 3);
        }
    }
    CHECK(saw_1234);

    REQUIRE(r.patterns.size() == 1);
    CHECK(r.patterns[0].extent == tids(ds, {1, 2, 3, 4}));
}

TEST_CASE("sofia on the worked example")
{
    const auto ds = example_dataset();
    const auto chain = build_chain(ds, ChainPolicy::input_order);
    for (std::size_t limit : {1, 3}) {
        const auto r = sofia::sofia(ds, chain, MeasureKind::delta, limit);
        CHECK(r.theta >= 1.0);
        CHECK(r.theta <= 2.0);
        REQUIRE(r.patterns.size() == 1);
        CHECK(r.patterns[0].extent == tids(ds, {1, 2, 3, 4}));
    }
    CHECK_THROWS_AS(sofia::sofia(ds, chain, MeasureKind::delta, 0), std::invalid_argument);
}

TEST_CASE("cosine needs an ascending-support chain")
{
    const auto ds = example_dataset();
    CHECK_THROWS_AS(Miner(ds, build_chain(ds, ChainPolicy::descending_support), MeasureKind::cosine),
                    std::invalid_argument);
    CHECK_NOTHROW(Miner(ds, build_chain(ds, ChainPolicy::ascending_support), MeasureKind::cosine));
    CHECK_THROWS_AS(Miner(ds, ProjectionChain({0, 1}), MeasureKind::delta), std::invalid_argument);
}

TEST_CASE("cosine and support mining agree with the baseline")
{
    const auto ds = example_dataset();
    const auto chain = build_chain(ds, ChainPolicy::ascending_support);
    for (auto kind : {MeasureKind::cosine, MeasureKind::support}) {
        for (double theta : {0.0, 0.4, 0.6, 1.0, 3.0}) {
            CAPTURE(theta);
            const auto mined = theta_sofia(ds, chain, kind, theta, {.verify = true});
            const auto base = oracle::postprune_threshold(ds, kind, theta);
            CHECK(extents_of(mined) == extents_of(base));
        }
    }
}

TEST_CASE("property: theta_sofia equals postprune for every measure")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const auto ds = testing::random_dataset(rng);
        const auto asc = build_chain(ds, ChainPolicy::ascending_support);
        const auto rnd = testing::random_chain(ds, rng);
        const double theta = static_cast<double>(rng() % 4);
        CHECK(extents_of(theta_sofia(ds, rnd, MeasureKind::delta, theta, {.verify = true})) ==
              extents_of(oracle::postprune_threshold(ds, MeasureKind::delta, theta)));
        CHECK(extents_of(theta_sofia(ds, rnd, MeasureKind::support, theta, {.verify = true})) ==
              extents_of(oracle::postprune_threshold(ds, MeasureKind::support, theta)));
        const double ctheta = 0.25 * static_cast<double>(rng() % 4);
        CHECK(extents_of(theta_sofia(ds, asc, MeasureKind::cosine, ctheta, {.verify = true})) ==
              extents_of(oracle::postprune_threshold(ds, MeasureKind::cosine, ctheta)));
    }
}

TEST_CASE("property: sofia stays within its limit and its own threshold")
{
    std::mt19937_64 rng(22);
    for (int round = 0; round < 300; ++round) {
        const auto ds = testing::random_dataset(rng);
        const auto chain = testing::random_chain(ds, rng);
        const std::size_t limit = 1 + rng() % 5;
        std::size_t widest = 0;
        MinerOptions opts;
        opts.verify = true;
        opts.on_step = [&](const StepEvent& ev) { widest = std::max(widest, ev.retained.size()); };
        const auto r = sofia::sofia(ds, chain, MeasureKind::delta, limit, 0.0, opts);
        CHECK(r.patterns.size() <= limit);
        // Before adjustment a step can at most double the retained set.
        CHECK(widest <= 2 * limit);
        CHECK(r.stats.preimage_evaluations <= r.stats.work_bound());
        CHECK(r.stats.max_patterns <= limit);
        for (const auto& p : r.patterns) {
            CHECK(p.measure.value > r.theta);
        }
        CHECK(extents_of(r) == extents_of(theta_sofia(ds, chain, MeasureKind::delta, r.theta)));
    }
}
