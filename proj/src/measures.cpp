#include <sofia/measures.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sofia {

std::string_view to_string(MeasureKind kind) noexcept
{
    switch (kind) {
    case MeasureKind::delta:
        return "delta";
    case MeasureKind::cosine:
        return "cosine";
    case MeasureKind::support:
        return "support";
    }
    return "unknown";
}

std::size_t support(const Tidset& e) noexcept
{
    return e.count();
}

std::size_t delta_full(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                       const Tidset& e)
{
    const std::size_t size = e.count();
    std::size_t best_child = 0;
    for (ItemId m : chain.order().first(k)) {
        const std::size_t c = e.intersection_count(ds.column(m));
        // c == size means m is in d(e).
        if (c < size) {
            best_child = std::max(best_child, c);
        }
    }
    return size - best_child;
}

std::size_t delta_full(const BinaryDataset& ds, const Tidset& e)
{
    const std::size_t size = e.count();
    std::size_t best_child = 0;
    for (const Tidset& col : ds.columns()) {
        const std::size_t c = e.intersection_count(col);
        if (c < size) {
            best_child = std::max(best_child, c);
        }
    }
    return size - best_child;
}

std::size_t delta_step_update(std::size_t old_delta, const Tidset& e, const Tidset& added_column)
{
    const std::size_t size = e.count();
    const std::size_t c = e.intersection_count(added_column);
    if (c == size) {
        return old_delta;
    }
    return std::min(old_delta, size - c);
}

double cosine(const BinaryDataset& ds, const Itemset& x)
{
    if (x.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    // Geometric mean as the n-th root of the product; long double keeps the
    // product exact for the supports seen in practice.
    long double product = 1.0L;
    for (ItemId i : x) {
        const std::size_t s = ds.item_support(i);
        if (s == 0) {
            throw std::domain_error("cosine undefined: item with zero support");
        }
        product *= static_cast<long double>(s);
    }
    const long double mean =
        x.size() == 1 ? product : std::pow(product, 1.0L / static_cast<long double>(x.size()));
    const std::size_t sup = extent(ds, x).count();
    return static_cast<double>(static_cast<long double>(sup) / mean);
}

std::vector<Tidset> immediate_children(const BinaryDataset& ds, const ProjectionChain& chain,
                                       std::size_t k, const Tidset& e)
{
    std::vector<Tidset> candidates;
    for (ItemId m : chain.order().first(k)) {
        const Tidset& col = ds.column(m);
        if (!e.is_subset_of(col)) {
            candidates.push_back(e & col);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Tidset> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            dominated = j != i && candidates[i].is_subset_of(candidates[j]);
        }
        if (!dominated) {
            maximal.push_back(candidates[i]);
        }
    }
    return maximal;
}

namespace {

// q is the probability that a single transaction is dropped.
BoundPair bounds_for(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                     const Tidset& e, double q)
{
    const auto children = immediate_children(ds, chain, k, e);
    if (children.empty()) {
        // e carries every visible item: closed in every subdataset.
        return {1.0, 1.0, false};
    }
    const std::size_t size = e.count();
    double sum = 0.0;
    std::size_t min_gap = size;
    for (const auto& child : children) {
        const std::size_t gap = size - child.count();
        min_gap = std::min(min_gap, gap);
        sum += std::pow(q, static_cast<double>(gap));
    }
    BoundPair b;
    b.upper = 1.0 - std::pow(q, static_cast<double>(min_gap));
    b.lower = 1.0 - sum;
    if (b.lower < 0.0) {
        b.lower = 0.0;
        b.clamped = true;
    }
    return b;
}

}  // namespace

BoundPair stability_bounds(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                           const Tidset& e)
{
    return bounds_for(ds, chain, k, e, 0.5);
}

BoundPair robustness_bounds(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                            const Tidset& e, double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
    return bounds_for(ds, chain, k, e, 1.0 - alpha);
}

MeasureValue evaluate(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                      const Tidset& e, MeasureKind kind)
{
    switch (kind) {
    case MeasureKind::delta:
        return {kind, static_cast<double>(delta_full(ds, chain, k, e))};
    case MeasureKind::support:
        return {kind, static_cast<double>(support(e))};
    case MeasureKind::cosine:
        return {kind, cosine(ds, intent(ds, e, chain.items_at(k)))};
    }
    throw std::invalid_argument("unknown measure kind");
}

}  // namespace sofia
