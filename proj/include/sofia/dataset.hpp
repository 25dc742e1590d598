#pragma once

#include <sofia/tidset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sofia {

/// Dense internal item id in [0, |I|).
using ItemId = std::uint32_t;
/// Item id as written in the input file.
using ExternalItem = std::uint64_t;

/// Strictly increasing sequence of internal item ids.
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<ItemId> items);
    /// Sorts and deduplicates.
    explicit Itemset(std::vector<ItemId> items);

    static Itemset all(std::size_t n_items);

    std::span<const ItemId> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    bool contains(ItemId i) const noexcept;
    bool is_subset_of(const Itemset& other) const noexcept;

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    bool operator==(const Itemset&) const = default;
    auto operator<=>(const Itemset&) const = default;

private:
    std::vector<ItemId> items_;
};

/// Immutable vertical binary dataset: one tidset column per item.
class BinaryDataset {
public:
    /// `columns[i]` is t({i}); `names[i]` is the external id of item i. All
    /// columns must have length `n_transactions`.
    BinaryDataset(std::size_t n_transactions, std::vector<Tidset> columns,
                  std::vector<ExternalItem> names);

    /// Builds from rows of external ids; duplicate ids within a row collapse.
    static BinaryDataset from_transactions(
        const std::vector<std::vector<ExternalItem>>& transactions);

    std::size_t n_transactions() const noexcept { return n_transactions_; }
    std::size_t n_items() const noexcept { return columns_.size(); }

    const Tidset& column(ItemId i) const;
    std::size_t item_support(ItemId i) const;
    ExternalItem external_id(ItemId i) const;
    /// Throws std::out_of_range for an unknown external id.
    ItemId internal_id(ExternalItem x) const;

    std::span<const Tidset> columns() const noexcept { return columns_; }

    Tidset all_transactions() const { return Tidset::full(n_transactions_); }
    Itemset all_items() const { return Itemset::all(n_items()); }

    /// Dataset made of transactions `order[0..count)`, renumbered 0..count-1.
    /// Items that do not occur in the selection are dropped; the relative
    /// order of the remaining internal ids is preserved.
    BinaryDataset select_transactions(std::span<const Tid> order) const;

private:
    std::size_t n_transactions_;
    std::vector<Tidset> columns_;
    std::vector<std::size_t> support_;
    std::vector<ExternalItem> names_;
    std::unordered_map<ExternalItem, ItemId> index_;
};

/// Parses FIMI text: one transaction per line, whitespace-separated
/// non-negative integers. Blank lines are empty transactions. Internal ids
/// follow first occurrence.
BinaryDataset parse_fimi(std::istream& in);
BinaryDataset parse_fimi(std::string_view text);
BinaryDataset load_fimi(const std::string& path);

/// One line per transaction, external ids in internal-id order.
std::string to_fimi(const BinaryDataset& ds);

/// t(x): transactions containing every item of x. extent(∅) is all of T.
Tidset extent(const BinaryDataset& ds, const Itemset& x);

/// d(a) restricted to `within`: the items of `within` whose column contains a.
Itemset intent(const BinaryDataset& ds, const Tidset& a, const Itemset& within);

}  // namespace sofia
