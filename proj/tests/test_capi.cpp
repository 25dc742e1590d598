#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sofia/sofia.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace {

const std::string kExample = "1 3\n2 3\n3 4\n3 5\n6\n";

sofia_dataset* parse(const std::string& text)
{
    sofia_dataset* ds = nullptr;
    REQUIRE(sofia_dataset_parse(text.data(), text.size(), &ds) == SOFIA_OK);
    return ds;
}

std::vector<uint64_t> items_of(const sofia_pattern& p)
{
    return {p.items, p.items + p.n_items};
}

}  // namespace

TEST_CASE("parse and inspect")
{
    sofia_dataset* ds = parse(kExample);
    CHECK(sofia_dataset_transactions(ds) == 5);
    CHECK(sofia_dataset_items(ds) == 6);
    sofia_dataset_free(ds);
    sofia_dataset_free(nullptr);
    CHECK(sofia_dataset_transactions(nullptr) == 0);
}

TEST_CASE("parse errors carry a line number")
{
    const std::string bad = "1 2\n3 x\n";
    sofia_dataset* ds = nullptr;
    CHECK(sofia_dataset_parse(bad.data(), bad.size(), &ds) == SOFIA_ERR_PARSE);
    CHECK(ds == nullptr);
    CHECK(std::string(sofia_last_error()).find("line 2") != std::string::npos);

    CHECK(sofia_dataset_load("/nonexistent/file.dat", &ds) == SOFIA_ERR_PARSE);
    CHECK(sofia_dataset_parse(nullptr, 3, &ds) == SOFIA_ERR_INVALID_ARGUMENT);
    CHECK(sofia_dataset_parse("", 0, &ds) == SOFIA_ERR_PARSE);
}

TEST_CASE("top-L mining through the C API")
{
    sofia_dataset* ds = parse(kExample);
    sofia_result* r = nullptr;
    REQUIRE(sofia_mine_top(ds, SOFIA_MEASURE_DELTA, SOFIA_ORDER_INPUT, 1, 0.0, &r) == SOFIA_OK);
    REQUIRE(sofia_result_size(r) == 1);
    CHECK(sofia_result_theta(r) == 1.0);
    sofia_pattern p{};
    REQUIRE(sofia_result_pattern(r, 0, &p) == SOFIA_OK);
    CHECK(items_of(p) == std::vector<uint64_t>{3});
    CHECK(p.support == 4);
    CHECK(p.measure == 3.0);
    CHECK(std::isnan(p.stability_lower));
    CHECK(std::isnan(p.exact_stability));
    CHECK(sofia_result_preimage_evaluations(r) <= 2 * 6 * sofia_result_max_patterns(r));

    CHECK(sofia_result_pattern(r, 1, &p) == SOFIA_ERR_INVALID_ARGUMENT);

    REQUIRE(sofia_result_compute_bounds(r, ds, 0.9) == SOFIA_OK);
    REQUIRE(sofia_result_compute_exact(r, ds, 0.9) == SOFIA_OK);
    REQUIRE(sofia_result_pattern(r, 0, &p) == SOFIA_OK);
    CHECK(p.stability_lower == doctest::Approx(0.5));
    CHECK(p.stability_upper == doctest::Approx(0.875));
    CHECK(p.exact_stability == 0.6875);
    CHECK(p.exact_robustness == doctest::Approx(0.9963).epsilon(1e-4));
    CHECK(p.robustness_lower <= p.exact_robustness);
    CHECK(p.exact_robustness <= p.robustness_upper);
    CHECK(sofia_result_clamped_bounds(r) == 0);
    CHECK(sofia_result_compute_bounds(r, ds, 1.5) == SOFIA_ERR_INVALID_ARGUMENT);
    sofia_result_free(r);

    CHECK(sofia_mine_top(ds, SOFIA_MEASURE_DELTA, SOFIA_ORDER_INPUT, 0, 0.0, &r) ==
          SOFIA_ERR_INVALID_ARGUMENT);
    CHECK(sofia_mine_top(ds, SOFIA_MEASURE_COSINE, SOFIA_ORDER_DESCENDING_SUPPORT, 3, 0.0, &r) ==
          SOFIA_ERR_INVALID_ARGUMENT);
    CHECK(sofia_mine_top(nullptr, SOFIA_MEASURE_DELTA, SOFIA_ORDER_INPUT, 1, 0.0, &r) ==
          SOFIA_ERR_INVALID_ARGUMENT);
    sofia_dataset_free(ds);
}

TEST_CASE("rows are ordered by measure, support, intent")
{
    sofia_dataset* ds = parse(kExample);
    sofia_result* r = nullptr;
    REQUIRE(sofia_enumerate(ds, SOFIA_MEASURE_DELTA, &r) == SOFIA_OK);
    REQUIRE(sofia_result_size(r) == 7);
    std::vector<std::vector<uint64_t>> intents;
    std::vector<double> values;
    for (std::size_t i = 0; i < sofia_result_size(r); ++i) {
        sofia_pattern p{};
        REQUIRE(sofia_result_pattern(r, i, &p) == SOFIA_OK);
        intents.push_back(items_of(p));
        values.push_back(p.measure);
    }
    CHECK(values == std::vector<double>{3, 1, 1, 1, 1, 1, 1});
    CHECK(intents[0] == std::vector<uint64_t>{3});
    CHECK(intents[1].empty());
    CHECK(intents[2] == std::vector<uint64_t>{1, 3});
    CHECK(intents[6] == std::vector<uint64_t>{6});
    sofia_result_free(r);
    sofia_dataset_free(ds);
}

TEST_CASE("threshold, baseline and guard")
{
    sofia_dataset* ds = parse(kExample);
    sofia_result* r = nullptr;
    REQUIRE(sofia_mine_threshold(ds, SOFIA_MEASURE_SUPPORT, SOFIA_ORDER_ASCENDING_SUPPORT, 3.0, &r) ==
            SOFIA_OK);
    CHECK(sofia_result_size(r) == 2);
    sofia_result_free(r);

    REQUIRE(sofia_baseline_top(ds, SOFIA_MEASURE_COSINE, 1, &r) == SOFIA_OK);
    CHECK(sofia_result_size(r) == 1);
    sofia_pattern p{};
    REQUIRE(sofia_result_pattern(r, 0, &p) == SOFIA_OK);
    CHECK(std::isinf(p.measure));
    sofia_result_free(r);
    CHECK(sofia_baseline_top(ds, SOFIA_MEASURE_DELTA, 0, &r) == SOFIA_ERR_INVALID_ARGUMENT);

    std::string big;
    for (int t = 0; t < 30; ++t) {
        big += std::to_string(t % 3 + 1) + "\n";
    }
    sofia_dataset* large = parse(big);
    REQUIRE(sofia_enumerate(large, SOFIA_MEASURE_DELTA, &r) == SOFIA_OK);
    CHECK(sofia_result_compute_exact(r, large, 0.9) == SOFIA_ERR_ORACLE_GUARD);
    CHECK(sofia_result_compute_exact(r, ds, 0.9) == SOFIA_ERR_INVALID_ARGUMENT);
    sofia_result_free(r);
    sofia_dataset_free(large);
    sofia_dataset_free(ds);
}

TEST_CASE("permuted prefixes")
{
    sofia_dataset* ds = parse(kExample);
    sofia_dataset* a = nullptr;
    sofia_dataset* b = nullptr;
    REQUIRE(sofia_dataset_permuted_prefix(ds, 7, 5, &a) == SOFIA_OK);
    CHECK(sofia_dataset_transactions(a) == 5);
    CHECK(sofia_dataset_items(a) == 6);
    REQUIRE(sofia_dataset_permuted_prefix(ds, 7, 2, &b) == SOFIA_OK);
    CHECK(sofia_dataset_transactions(b) == 2);
    CHECK(sofia_dataset_items(b) <= 4);
    CHECK(sofia_dataset_permuted_prefix(ds, 7, 0, &b) == SOFIA_ERR_INVALID_ARGUMENT);
    CHECK(sofia_dataset_permuted_prefix(ds, 7, 6, &b) == SOFIA_ERR_INVALID_ARGUMENT);
    sofia_dataset_free(a);
    sofia_dataset_free(b);
    sofia_dataset_free(ds);
}
