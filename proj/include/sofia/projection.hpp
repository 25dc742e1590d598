#pragma once

#include <sofia/dataset.hpp>

#include <cstddef>
#include <vector>

namespace sofia {

/// `input_order` walks items by increasing external id (i1, i2, ... as
/// named in the file); the support policies break ties by internal id.
enum class ChainPolicy { ascending_support, descending_support, input_order };

/// Total order on items. Step k of the chain sees the first k items of
/// `order()`; step 0 sees no items, step n_items() sees the whole dataset.
class ProjectionChain {
public:
    /// Throws std::invalid_argument unless `order` is a permutation of
    /// 0..order.size()-1.
    explicit ProjectionChain(std::vector<ItemId> order);

    std::size_t n_steps() const noexcept { return order_.size(); }
    std::span<const ItemId> order() const noexcept { return order_; }

    /// Item added when moving from step k-1 to step k (1 <= k <= n_steps()).
    ItemId added_at(std::size_t k) const;
    /// Whether `item` is visible at step k.
    bool visible(ItemId item, std::size_t k) const noexcept { return rank_[item] < k; }
    /// I_k as a sorted itemset.
    Itemset items_at(std::size_t k) const;

private:
    std::vector<ItemId> order_;
    std::vector<std::size_t> rank_;
};

ProjectionChain build_chain(const BinaryDataset& ds, ChainPolicy policy);

/// True when supports never decrease along the chain.
bool is_ascending_support(const BinaryDataset& ds, const ProjectionChain& chain);

/// Closure of `a` in the k-th projected dataset: t(d(a) ∩ I_k).
Tidset project_extent(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                      const Tidset& a);

/// Extents of step k whose projection to step k-1 is `e`. `e` must be closed
/// at step k-1. The result always starts with `e` itself; the second element,
/// when present, is e ∩ t({m}) for the item m added at step k.
std::vector<Tidset> preimages(const BinaryDataset& ds, const ProjectionChain& chain,
                              std::size_t k, const Tidset& e);

}  // namespace sofia
