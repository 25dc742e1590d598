#include <sofia/sofia.h>

#include <sofia/dataset.hpp>
#include <sofia/error.hpp>
#include <sofia/measures.hpp>
#include <sofia/miner.hpp>
#include <sofia/oracle.hpp>
#include <sofia/projection.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

struct sofia_dataset {
    sofia::BinaryDataset data;
};

namespace {

struct Row {
    sofia::Tidset extent;
    std::vector<uint64_t> items;
    uint64_t support = 0;
    double measure = 0.0;
    double stab_lo = std::numeric_limits<double>::quiet_NaN();
    double stab_hi = std::numeric_limits<double>::quiet_NaN();
    double rbst_lo = std::numeric_limits<double>::quiet_NaN();
    double rbst_hi = std::numeric_limits<double>::quiet_NaN();
    double exact_stab = std::numeric_limits<double>::quiet_NaN();
    double exact_rbst = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace

struct sofia_result {
    std::size_t n_transactions = 0;
    double theta = 0.0;
    uint64_t preimage_evaluations = 0;
    uint64_t max_patterns = 0;
    std::size_t clamped = 0;
    std::vector<Row> rows;
};

namespace {

thread_local std::string last_error;

sofia_status fail(sofia_status status, const std::string& message)
{
    last_error = message;
    return status;
}

// Maps exceptions from the core onto status codes.
template <class F>
sofia_status guarded(F&& body)
{
    try {
        body();
        return SOFIA_OK;
    } catch (const sofia::ParseError& e) {
        return fail(SOFIA_ERR_PARSE, e.what());
    } catch (const sofia::OracleGuardError& e) {
        return fail(SOFIA_ERR_ORACLE_GUARD, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SOFIA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SOFIA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(SOFIA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SOFIA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SOFIA_ERR_INTERNAL, "unknown error");
    }
}

sofia::MeasureKind to_kind(sofia_measure m)
{
    switch (m) {
    case SOFIA_MEASURE_DELTA:
        return sofia::MeasureKind::delta;
    case SOFIA_MEASURE_COSINE:
        return sofia::MeasureKind::cosine;
    case SOFIA_MEASURE_SUPPORT:
        return sofia::MeasureKind::support;
    }
    throw std::invalid_argument("unknown measure");
}

sofia::ChainPolicy to_policy(sofia_order o)
{
    switch (o) {
    case SOFIA_ORDER_ASCENDING_SUPPORT:
        return sofia::ChainPolicy::ascending_support;
    case SOFIA_ORDER_DESCENDING_SUPPORT:
        return sofia::ChainPolicy::descending_support;
    case SOFIA_ORDER_INPUT:
        return sofia::ChainPolicy::input_order;
    }
    throw std::invalid_argument("unknown chain order");
}

sofia_result* make_result(const sofia::BinaryDataset& ds, const sofia::MiningResult& mined)
{
    auto result = std::make_unique<sofia_result>();
    result->n_transactions = ds.n_transactions();
    result->theta = mined.theta;
    result->preimage_evaluations = mined.stats.preimage_evaluations;
    result->max_patterns = mined.stats.max_patterns;
    const sofia::Itemset all = ds.all_items();
    for (const auto& p : mined.patterns) {
        Row row;
        row.extent = p.extent;
        for (sofia::ItemId i : sofia::intent(ds, p.extent, all)) {
            row.items.push_back(ds.external_id(i));
        }
        std::sort(row.items.begin(), row.items.end());
        row.support = p.support;
        row.measure = p.measure.value;
        result->rows.push_back(std::move(row));
    }
    std::sort(result->rows.begin(), result->rows.end(), [](const Row& a, const Row& b) {
        if (a.measure != b.measure) {
            return a.measure > b.measure;
        }
        if (a.support != b.support) {
            return a.support > b.support;
        }
        return a.items < b.items;
    });
    return result.release();
}

void check_out(const void* p)
{
    if (p == nullptr) {
        throw std::invalid_argument("null argument");
    }
}

void check_compatible(const sofia_result* result, const sofia_dataset* ds)
{
    check_out(result);
    check_out(ds);
    if (result->n_transactions != ds->data.n_transactions()) {
        throw std::invalid_argument("result was mined from a different dataset");
    }
}

}  // namespace

extern "C" {

const char* sofia_last_error(void)
{
    return last_error.c_str();
}

sofia_status sofia_dataset_load(const char* path, sofia_dataset** out)
{
    return guarded([&] {
        check_out(path);
        check_out(out);
        *out = new sofia_dataset{sofia::load_fimi(path)};
    });
}

sofia_status sofia_dataset_parse(const char* text, size_t length, sofia_dataset** out)
{
    return guarded([&] {
        check_out(out);
        if (text == nullptr && length != 0) {
            throw std::invalid_argument("null text");
        }
        *out = new sofia_dataset{sofia::parse_fimi(std::string_view(text ? text : "", length))};
    });
}

void sofia_dataset_free(sofia_dataset* ds)
{
    delete ds;
}

size_t sofia_dataset_transactions(const sofia_dataset* ds)
{
    return ds ? ds->data.n_transactions() : 0;
}

size_t sofia_dataset_items(const sofia_dataset* ds)
{
    return ds ? ds->data.n_items() : 0;
}

sofia_status sofia_dataset_permuted_prefix(const sofia_dataset* ds, uint64_t seed, size_t count,
                                           sofia_dataset** out)
{
    return guarded([&] {
        check_out(ds);
        check_out(out);
        const std::size_t n = ds->data.n_transactions();
        if (count == 0 || count > n) {
            throw std::invalid_argument("prefix length must lie in [1, " + std::to_string(n) + "]");
        }
        std::vector<sofia::Tid> order(n);
        std::iota(order.begin(), order.end(), sofia::Tid{0});
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(count);
        *out = new sofia_dataset{ds->data.select_transactions(order)};
    });
}

sofia_status sofia_mine_top(const sofia_dataset* ds, sofia_measure measure, sofia_order order,
                            size_t limit, double theta_min, sofia_result** out)
{
    return guarded([&] {
        check_out(ds);
        check_out(out);
        const auto& data = ds->data;
        auto mined = sofia::sofia(data, sofia::build_chain(data, to_policy(order)),
                                  to_kind(measure), limit, theta_min);
        *out = make_result(data, mined);
    });
}

sofia_status sofia_mine_threshold(const sofia_dataset* ds, sofia_measure measure,
                                  sofia_order order, double theta, sofia_result** out)
{
    return guarded([&] {
        check_out(ds);
        check_out(out);
        const auto& data = ds->data;
        auto mined = sofia::theta_sofia(data, sofia::build_chain(data, to_policy(order)),
                                        to_kind(measure), theta);
        *out = make_result(data, mined);
    });
}

sofia_status sofia_baseline_top(const sofia_dataset* ds, sofia_measure measure, size_t k,
                                sofia_result** out)
{
    return guarded([&] {
        check_out(ds);
        check_out(out);
        if (k == 0) {
            throw std::invalid_argument("k must be at least 1");
        }
        auto mined = sofia::oracle::postprune_topk(ds->data, to_kind(measure), k);
        *out = make_result(ds->data, mined);
    });
}

sofia_status sofia_enumerate(const sofia_dataset* ds, sofia_measure measure, sofia_result** out)
{
    return guarded([&] {
        check_out(ds);
        check_out(out);
        auto mined = sofia::oracle::postprune_threshold(ds->data, to_kind(measure),
                                                        -std::numeric_limits<double>::infinity());
        *out = make_result(ds->data, mined);
    });
}

void sofia_result_free(sofia_result* result)
{
    delete result;
}

size_t sofia_result_size(const sofia_result* result)
{
    return result ? result->rows.size() : 0;
}

double sofia_result_theta(const sofia_result* result)
{
    return result ? result->theta : std::numeric_limits<double>::quiet_NaN();
}

sofia_status sofia_result_pattern(const sofia_result* result, size_t index, sofia_pattern* out)
{
    return guarded([&] {
        check_out(result);
        check_out(out);
        if (index >= result->rows.size()) {
            throw std::out_of_range("pattern index out of range");
        }
        const Row& r = result->rows[index];
        *out = sofia_pattern{r.items.data(), r.items.size(), r.support,    r.measure,
                             r.stab_lo,      r.stab_hi,      r.rbst_lo,    r.rbst_hi,
                             r.exact_stab,   r.exact_rbst};
    });
}

uint64_t sofia_result_preimage_evaluations(const sofia_result* result)
{
    return result ? result->preimage_evaluations : 0;
}

uint64_t sofia_result_max_patterns(const sofia_result* result)
{
    return result ? result->max_patterns : 0;
}

size_t sofia_result_clamped_bounds(const sofia_result* result)
{
    return result ? result->clamped : 0;
}

sofia_status sofia_result_compute_bounds(sofia_result* result, const sofia_dataset* ds,
                                         double alpha)
{
    return guarded([&] {
        check_compatible(result, ds);
        const auto& data = ds->data;
        const auto chain = sofia::build_chain(data, sofia::ChainPolicy::input_order);
        const std::size_t k = chain.n_steps();
        std::size_t clamped = 0;
        for (Row& r : result->rows) {
            const auto stab = sofia::stability_bounds(data, chain, k, r.extent);
            const auto rbst = sofia::robustness_bounds(data, chain, k, r.extent, alpha);
            r.stab_lo = stab.lower;
            r.stab_hi = stab.upper;
            r.rbst_lo = rbst.lower;
            r.rbst_hi = rbst.upper;
            clamped += stab.clamped ? 1 : 0;
        }
        result->clamped = clamped;
    });
}

sofia_status sofia_result_compute_exact(sofia_result* result, const sofia_dataset* ds,
                                        double alpha)
{
    return guarded([&] {
        check_compatible(result, ds);
        for (Row& r : result->rows) {
            r.exact_stab = sofia::oracle::exact_stability(ds->data, r.extent);
            r.exact_rbst = sofia::oracle::exact_robustness(ds->data, r.extent, alpha);
        }
    });
}

}  // extern "C"
