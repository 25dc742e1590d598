#include <sofia/projection.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sofia {

ProjectionChain::ProjectionChain(std::vector<ItemId> order)
    : order_(std::move(order)), rank_(order_.size(), std::numeric_limits<std::size_t>::max())
{
    for (std::size_t k = 0; k < order_.size(); ++k) {
        const ItemId item = order_[k];
        if (item >= order_.size() || rank_[item] != std::numeric_limits<std::size_t>::max()) {
            throw std::invalid_argument("projection order is not a permutation");
        }
        rank_[item] = k;
    }
}

ItemId ProjectionChain::added_at(std::size_t k) const
{
    if (k == 0 || k > order_.size()) {
        throw std::out_of_range("projection step out of range");
    }
    return order_[k - 1];
}

Itemset ProjectionChain::items_at(std::size_t k) const
{
    if (k > order_.size()) {
        throw std::out_of_range("projection step out of range");
    }
    return Itemset(std::vector<ItemId>(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(k)));
}

ProjectionChain build_chain(const BinaryDataset& ds, ChainPolicy policy)
{
    std::vector<ItemId> order(ds.n_items());
    std::iota(order.begin(), order.end(), ItemId{0});
    switch (policy) {
    case ChainPolicy::input_order:
        std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
            return ds.external_id(a) < ds.external_id(b);
        });
        break;
    case ChainPolicy::ascending_support:
        std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
            return ds.item_support(a) < ds.item_support(b);
        });
        break;
    case ChainPolicy::descending_support:
        std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
            return ds.item_support(a) > ds.item_support(b);
        });
        break;
    }
    return ProjectionChain(std::move(order));
}

bool is_ascending_support(const BinaryDataset& ds, const ProjectionChain& chain)
{
    const auto order = chain.order();
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (ds.item_support(order[k - 1]) > ds.item_support(order[k])) {
            return false;
        }
    }
    return true;
}

Tidset project_extent(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                      const Tidset& a)
{
    return extent(ds, intent(ds, a, chain.items_at(k)));
}

std::vector<Tidset> preimages(const BinaryDataset& ds, const ProjectionChain& chain,
                              std::size_t k, const Tidset& e)
{
    const ItemId added = chain.added_at(k);
    std::vector<Tidset> result;
    result.push_back(e);

    Tidset child = e & ds.column(added);
    if (child == e) {
        return result;
    }
    // child's closure at step k-1 is e iff no item of I_{k-1} outside d(e)
    // covers child; otherwise child belongs to a smaller parent.
    for (ItemId j : chain.order().first(k - 1)) {
        const Tidset& col = ds.column(j);
        if (child.is_subset_of(col) && !e.is_subset_of(col)) {
            return result;
        }
    }
    result.push_back(std::move(child));
    return result;
}

}  // namespace sofia
