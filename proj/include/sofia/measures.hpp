#pragma once

#include <sofia/dataset.hpp>
#include <sofia/projection.hpp>

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

namespace sofia {

enum class MeasureKind { delta, cosine, support };

std::string_view to_string(MeasureKind kind) noexcept;

/// Quality score of a pattern. Support and Δ are non-negative integers held
/// exactly; cosine is +∞ for the empty itemset, which compares above every
/// finite value.
struct MeasureValue {
    MeasureKind kind = MeasureKind::delta;
    double value = 0.0;

    auto operator<=>(const MeasureValue& other) const noexcept
    {
        return value <=> other.value;
    }
    bool operator==(const MeasureValue& other) const noexcept { return value == other.value; }
};

/// Stability/robustness bracket. `clamped` is set when the raw lower bound
/// was negative and got raised to 0.
struct BoundPair {
    double lower = 0.0;
    double upper = 1.0;
    bool clamped = false;
};

std::size_t support(const Tidset& e) noexcept;

/// Δ of closed extent `e` in the k-th projected dataset:
/// |e| - max |e ∩ t({m})| over visible items m outside d(e), or |e| when
/// there is no such item.
std::size_t delta_full(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                       const Tidset& e);
/// Δ in the full dataset.
std::size_t delta_full(const BinaryDataset& ds, const Tidset& e);

/// Δ after the chain adds one item whose column is `added_column`, given
/// the Δ of `e` before the step.
std::size_t delta_step_update(std::size_t old_delta, const Tidset& e, const Tidset& added_column);

/// |t(x)| over the geometric mean of item supports; +∞ for x = ∅.
/// Throws std::domain_error when an item of x has zero support.
double cosine(const BinaryDataset& ds, const Itemset& x);

/// Maximal proper closed sub-extents of closed extent `e` at step k, sorted.
std::vector<Tidset> immediate_children(const BinaryDataset& ds, const ProjectionChain& chain,
                                       std::size_t k, const Tidset& e);

BoundPair stability_bounds(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                           const Tidset& e);
/// Throws std::invalid_argument when alpha is outside [0, 1].
BoundPair robustness_bounds(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                            const Tidset& e, double alpha);

/// Measure of closed extent `e` recomputed from scratch at step k. Cosine is
/// evaluated on the intent of `e` within I_k.
MeasureValue evaluate(const BinaryDataset& ds, const ProjectionChain& chain, std::size_t k,
                      const Tidset& e, MeasureKind kind);

}  // namespace sofia
