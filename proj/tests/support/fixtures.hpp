#pragma once

// Shared test data: the four-item worked example and a seeded generator of
// small random datasets.

#include <sofia/dataset.hpp>
#include <sofia/projection.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sofia::testing {

// t1={i1,i3} t2={i2,i3} t3={i3,i4} t4={i3,i5} t5={i6}
inline constexpr const char* kExampleFimi = "1 3\n2 3\n3 4\n3 5\n6\n";

inline BinaryDataset example_dataset()
{
    return parse_fimi(std::string_view(kExampleFimi));
}

/// Tidset from 1-based transaction numbers, the way the worked example
/// writes extents ("1234" is {t1,t2,t3,t4}).
inline Tidset tids(const BinaryDataset& ds, std::initializer_list<Tid> one_based)
{
    Tidset out(ds.n_transactions());
    for (Tid t : one_based) {
        out.set(t - 1);
    }
    return out;
}

/// Itemset from external ids.
inline Itemset items(const BinaryDataset& ds, std::initializer_list<ExternalItem> external)
{
    std::vector<ItemId> ids;
    for (ExternalItem x : external) {
        ids.push_back(ds.internal_id(x));
    }
    return Itemset(std::move(ids));
}

struct RandomSpec {
    std::size_t max_transactions = 12;
    std::size_t max_items = 8;
};

/// Random dataset with 1..max_transactions rows over up to max_items items,
/// density drawn from {0.2, 0.5, 0.8}. Every row gets at least one draw, so
/// blank rows are possible; items that never occur are absent.
inline BinaryDataset random_dataset(std::mt19937_64& rng, RandomSpec spec = {})
{
    static constexpr double kDensities[] = {0.2, 0.5, 0.8};
    std::uniform_int_distribution<std::size_t> n_rows(1, spec.max_transactions);
    std::uniform_int_distribution<std::size_t> n_cols(1, spec.max_items);
    const std::size_t n = n_rows(rng);
    const std::size_t m = n_cols(rng);
    std::bernoulli_distribution cell(kDensities[rng() % 3]);
    std::vector<std::vector<ExternalItem>> rows(n);
    for (auto& row : rows) {
        for (std::size_t i = 0; i < m; ++i) {
            if (cell(rng)) {
                row.push_back(10 + i);
            }
        }
    }
    return BinaryDataset::from_transactions(rows);
}

inline ProjectionChain random_chain(const BinaryDataset& ds, std::mt19937_64& rng)
{
    std::vector<ItemId> order(ds.n_items());
    for (ItemId i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::shuffle(order.begin(), order.end(), rng);
    return ProjectionChain(std::move(order));
}

}  // namespace sofia::testing
