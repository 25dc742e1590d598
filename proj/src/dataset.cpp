#include <sofia/dataset.hpp>

#include <sofia/error.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sofia {

Itemset::Itemset(std::initializer_list<ItemId> items) : Itemset(std::vector<ItemId>(items)) {}

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items))
{
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset Itemset::all(std::size_t n_items)
{
    Itemset s;
    s.items_.resize(n_items);
    for (std::size_t i = 0; i < n_items; ++i) {
        s.items_[i] = static_cast<ItemId>(i);
    }
    return s;
}

bool Itemset::contains(ItemId i) const noexcept
{
    return std::binary_search(items_.begin(), items_.end(), i);
}

bool Itemset::is_subset_of(const Itemset& other) const noexcept
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

BinaryDataset::BinaryDataset(std::size_t n_transactions, std::vector<Tidset> columns,
                             std::vector<ExternalItem> names)
    : n_transactions_(n_transactions), columns_(std::move(columns)), names_(std::move(names))
{
    if (columns_.size() != names_.size()) {
        throw std::invalid_argument("column and name counts differ");
    }
    support_.reserve(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].size() != n_transactions_) {
            throw std::invalid_argument("column length differs from transaction count");
        }
        support_.push_back(columns_[i].count());
        if (!index_.emplace(names_[i], static_cast<ItemId>(i)).second) {
            throw std::invalid_argument("duplicate external item id " + std::to_string(names_[i]));
        }
    }
}

namespace {

// Accumulates tid lists per item in first-occurrence order, then packs them
// into columns once the transaction count is known.
class ColumnBuilder {
public:
    void add(ExternalItem x, Tid t)
    {
        auto [it, inserted] = index_.try_emplace(x, static_cast<ItemId>(names_.size()));
        if (inserted) {
            names_.push_back(x);
            tids_.emplace_back();
        }
        auto& list = tids_[it->second];
        // Repeated token on the same line.
        if (list.empty() || list.back() != t) {
            list.push_back(t);
        }
    }

    BinaryDataset finish(std::size_t n_transactions) &&
    {
        std::vector<Tidset> columns;
        columns.reserve(tids_.size());
        for (const auto& list : tids_) {
            columns.push_back(Tidset::from_tids(n_transactions, list));
        }
        return BinaryDataset(n_transactions, std::move(columns), std::move(names_));
    }

private:
    std::unordered_map<ExternalItem, ItemId> index_;
    std::vector<ExternalItem> names_;
    std::vector<std::vector<Tid>> tids_;
};

}  // namespace

BinaryDataset BinaryDataset::from_transactions(
    const std::vector<std::vector<ExternalItem>>& transactions)
{
    ColumnBuilder builder;
    for (std::size_t t = 0; t < transactions.size(); ++t) {
        for (ExternalItem x : transactions[t]) {
            builder.add(x, static_cast<Tid>(t));
        }
    }
    return std::move(builder).finish(transactions.size());
}

const Tidset& BinaryDataset::column(ItemId i) const
{
    if (i >= columns_.size()) {
        throw std::out_of_range("item id " + std::to_string(i) + " out of range");
    }
    return columns_[i];
}

std::size_t BinaryDataset::item_support(ItemId i) const
{
    if (i >= support_.size()) {
        throw std::out_of_range("item id " + std::to_string(i) + " out of range");
    }
    return support_[i];
}

ExternalItem BinaryDataset::external_id(ItemId i) const
{
    if (i >= names_.size()) {
        throw std::out_of_range("item id " + std::to_string(i) + " out of range");
    }
    return names_[i];
}

ItemId BinaryDataset::internal_id(ExternalItem x) const
{
    auto it = index_.find(x);
    if (it == index_.end()) {
        throw std::out_of_range("unknown external item " + std::to_string(x));
    }
    return it->second;
}

BinaryDataset BinaryDataset::select_transactions(std::span<const Tid> order) const
{
    const std::size_t n = order.size();
    std::vector<Tidset> columns;
    std::vector<ExternalItem> names;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        Tidset col(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (order[j] >= n_transactions_) {
                throw std::out_of_range("tid out of range");
            }
            if (columns_[i].test(order[j])) {
                col.set(static_cast<Tid>(j));
            }
        }
        if (!col.none()) {
            columns.push_back(std::move(col));
            names.push_back(names_[i]);
        }
    }
    return BinaryDataset(n, std::move(columns), std::move(names));
}

BinaryDataset parse_fimi(std::istream& in)
{
    ColumnBuilder builder;
    std::string line;
    std::size_t n_lines = 0;
    while (std::getline(in, line)) {
        ++n_lines;
        const Tid tid = static_cast<Tid>(n_lines - 1);
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end) {
            while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\v' || *p == '\f')) {
                ++p;
            }
            if (p == end) {
                break;
            }
            const char* token_end = p;
            while (token_end < end && *token_end != ' ' && *token_end != '\t' &&
                   *token_end != '\r' && *token_end != '\v' && *token_end != '\f') {
                ++token_end;
            }
            ExternalItem value = 0;
            auto [ptr, ec] = std::from_chars(p, token_end, value);
            if (ec != std::errc{} || ptr != token_end) {
                throw ParseError("invalid item token '" + std::string(p, token_end) + "'",
                                 n_lines);
            }
            builder.add(value, tid);
            p = token_end;
        }
    }
    if (n_lines == 0) {
        throw ParseError("no transactions", 0);
    }
    return std::move(builder).finish(n_lines);
}

BinaryDataset parse_fimi(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_fimi(in);
}

BinaryDataset load_fimi(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'", 0);
    }
    return parse_fimi(in);
}

std::string to_fimi(const BinaryDataset& ds)
{
    std::vector<std::string> lines(ds.n_transactions());
    for (ItemId i = 0; i < ds.n_items(); ++i) {
        const std::string name = std::to_string(ds.external_id(i));
        ds.column(i).for_each([&](Tid t) {
            if (!lines[t].empty()) {
                lines[t] += ' ';
            }
            lines[t] += name;
        });
    }
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

Tidset extent(const BinaryDataset& ds, const Itemset& x)
{
    Tidset result = ds.all_transactions();
    for (ItemId i : x) {
        result &= ds.column(i);
    }
    return result;
}

Itemset intent(const BinaryDataset& ds, const Tidset& a, const Itemset& within)
{
    std::vector<ItemId> items;
    for (ItemId i : within) {
        if (a.is_subset_of(ds.column(i))) {
            items.push_back(i);
        }
    }
    return Itemset(std::move(items));
}

}  // namespace sofia
