#include <sofia/oracle.hpp>

#include <sofia/error.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace sofia::oracle {

namespace {

class CloseByOne {
public:
    CloseByOne(const BinaryDataset& ds, std::size_t min_support)
        : ds_(ds), min_support_(min_support)
    {
    }

    std::vector<Concept> run()
    {
        Tidset top = ds_.all_transactions();
        if (top.count() >= min_support_) {
            std::vector<bool> intent = closure(top);
            visit(top, intent, 0);
        }
        std::sort(out_.begin(), out_.end(),
                  [](const Concept& a, const Concept& b) { return a.extent < b.extent; });
        return std::move(out_);
    }

private:
    std::vector<bool> closure(const Tidset& a) const
    {
        std::vector<bool> d(ds_.n_items());
        for (ItemId i = 0; i < ds_.n_items(); ++i) {
            d[i] = a.is_subset_of(ds_.column(i));
        }
        return d;
    }

    void visit(const Tidset& a, const std::vector<bool>& b, ItemId from)
    {
        std::vector<ItemId> items;
        for (ItemId i = 0; i < b.size(); ++i) {
            if (b[i]) {
                items.push_back(i);
            }
        }
        out_.push_back(Concept{a, Itemset(std::move(items))});

        for (ItemId j = from; j < ds_.n_items(); ++j) {
            if (b[j]) {
                continue;
            }
            Tidset c = a & ds_.column(j);
            if (c.count() < min_support_) {
                continue;
            }
            std::vector<bool> d = closure(c);
            // Canonicity: the closure may not add any item before j.
            bool canonical = true;
            for (ItemId i = 0; i < j && canonical; ++i) {
                canonical = d[i] == b[i];
            }
            if (canonical) {
                visit(c, d, j + 1);
            }
        }
    }

    const BinaryDataset& ds_;
    std::size_t min_support_;
    std::vector<Concept> out_;
};

// Row-wise item bitsets; the exact oracle walks subdatasets transaction by
// transaction.
using Row = std::vector<std::uint64_t>;

std::vector<Row> build_rows(const BinaryDataset& ds)
{
    const std::size_t words = (ds.n_items() + 63) / 64;
    std::vector<Row> rows(ds.n_transactions(), Row(words, 0));
    for (ItemId i = 0; i < ds.n_items(); ++i) {
        ds.column(i).for_each([&](Tid t) { rows[t][i / 64] |= std::uint64_t{1} << (i % 64); });
    }
    return rows;
}

Row common_items(const std::vector<Row>& rows, std::uint32_t subset, std::size_t n_items)
{
    const std::size_t words = (n_items + 63) / 64;
    Row d(words, ~std::uint64_t{0});
    if (n_items % 64 != 0) {
        d.back() = (std::uint64_t{1} << (n_items % 64)) - 1;
    }
    while (subset != 0) {
        const auto t = static_cast<std::size_t>(std::countr_zero(subset));
        for (std::size_t w = 0; w < words; ++w) {
            d[w] &= rows[t][w];
        }
        subset &= subset - 1;
    }
    return d;
}

// Calls visit(|S|) for every subdataset S in which d(e) is still closed,
// i.e. d(e ∩ S) == d(e).
void for_each_closing_subdataset(const BinaryDataset& ds, const Tidset& e,
                                 const std::function<void(std::size_t)>& visit)
{
    const std::size_t n = ds.n_transactions();
    if (n > kMaxExactTransactions) {
        throw OracleGuardError("dataset too large for exact oracle (" + std::to_string(n) +
                               " transactions, limit " +
                               std::to_string(kMaxExactTransactions) + ")");
    }
    const auto rows = build_rows(ds);
    std::uint32_t e_mask = 0;
    e.for_each([&](Tid t) { e_mask |= std::uint32_t{1} << t; });
    const Row target = common_items(rows, e_mask, ds.n_items());

    const std::uint64_t n_subsets = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < n_subsets; ++s) {
        const auto subset = static_cast<std::uint32_t>(s);
        if (common_items(rows, subset & e_mask, ds.n_items()) == target) {
            visit(static_cast<std::size_t>(std::popcount(subset)));
        }
    }
}

}  // namespace

std::vector<Concept> enumerate_closed(const BinaryDataset& ds, std::size_t min_support)
{
    return CloseByOne(ds, min_support).run();
}

double exact_stability(const BinaryDataset& ds, const Tidset& e)
{
    std::uint64_t closed = 0;
    for_each_closing_subdataset(ds, e, [&](std::size_t) { ++closed; });
    return std::ldexp(static_cast<double>(closed), -static_cast<int>(ds.n_transactions()));
}

double exact_robustness(const BinaryDataset& ds, const Tidset& e, double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
    const std::size_t n = ds.n_transactions();
    std::vector<double> weight(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
        weight[s] = std::pow(alpha, static_cast<double>(s)) *
                    std::pow(1.0 - alpha, static_cast<double>(n - s));
    }
    double total = 0.0;
    for_each_closing_subdataset(ds, e, [&](std::size_t s) { total += weight[s]; });
    return total;
}

std::vector<std::size_t> lattice_deltas(const std::vector<Concept>& concepts)
{
    std::vector<std::size_t> sizes;
    sizes.reserve(concepts.size());
    for (const auto& c : concepts) {
        sizes.push_back(c.extent.count());
    }
    std::vector<std::size_t> deltas(concepts.size());
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < concepts.size(); ++j) {
            if (sizes[j] < sizes[i] && sizes[j] > best &&
                concepts[j].extent.is_subset_of(concepts[i].extent)) {
                best = sizes[j];
            }
        }
        deltas[i] = sizes[i] - best;
    }
    return deltas;
}

std::vector<PatternEntry> score_closed(const BinaryDataset& ds, MeasureKind kind)
{
    const auto concepts = enumerate_closed(ds, 1);
    std::vector<std::size_t> deltas;
    if (kind == MeasureKind::delta) {
        deltas = lattice_deltas(concepts);
    }
    std::vector<PatternEntry> scored;
    scored.reserve(concepts.size());
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        const auto& c = concepts[i];
        double value = 0.0;
        switch (kind) {
        case MeasureKind::delta:
            value = static_cast<double>(deltas[i]);
            break;
        case MeasureKind::support:
            value = static_cast<double>(c.extent.count());
            break;
        case MeasureKind::cosine:
            value = cosine(ds, c.intent);
            break;
        }
        scored.push_back(PatternEntry{c.extent, MeasureValue{kind, value}, c.extent.count()});
    }
    return scored;
}

MiningResult postprune_threshold(const BinaryDataset& ds, MeasureKind kind, double theta)
{
    MiningResult result;
    result.theta = theta;
    result.patterns = score_closed(ds, kind);
    result.stats.max_patterns = result.patterns.size();
    prune_patterns(result.patterns, theta);
    return result;
}

MiningResult postprune_topk(const BinaryDataset& ds, MeasureKind kind, std::size_t k)
{
    MiningResult result;
    result.patterns = score_closed(ds, kind);
    result.stats.max_patterns = result.patterns.size();
    result.theta = adjust_theta(result.patterns, 0.0, k);
    prune_patterns(result.patterns, result.theta);
    return result;
}

}  // namespace sofia::oracle
