#pragma once

#include <sofia/dataset.hpp>
#include <sofia/measures.hpp>
#include <sofia/projection.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sofia {

/// A closed extent of the current projection with its cached measure.
struct PatternEntry {
    Tidset extent;
    MeasureValue measure;
    std::size_t support = 0;
};

/// Snapshot passed to MinerOptions::on_step after every projection step
/// (including step 0). `generated` holds every preimage with its measure
/// before pruning; `retained` is what survived `theta`.
struct StepEvent {
    std::size_t step = 0;
    double theta = 0.0;
    std::span<const PatternEntry> generated;
    std::span<const PatternEntry> retained;
};

struct MinerOptions {
    /// Recompute every cached measure from scratch after each step and check
    /// closedness and parent uniqueness; throws std::logic_error on mismatch.
    bool verify = false;
    std::function<void(const StepEvent&)> on_step;
};

struct MinerStats {
    /// Preimages produced over the whole run.
    std::size_t preimage_evaluations = 0;
    /// Largest pattern set handed to a projection step.
    std::size_t max_patterns = 0;
    std::size_t steps = 0;

    /// 2 * |I| * max_k |P_k|.
    std::size_t work_bound() const noexcept { return 2 * steps * max_patterns; }
};

struct MinerState {
    std::size_t step = 0;
    std::vector<PatternEntry> patterns;
    double theta = 0.0;
    std::optional<std::size_t> limit;
};

struct MiningResult {
    double theta = 0.0;
    std::vector<PatternEntry> patterns;
    MinerStats stats;
};

/// Smallest threshold >= `theta` leaving at most `limit` values strictly
/// above it. Ties at the cut are dropped together, so fewer than `limit`
/// values may survive.
double adjust_theta(std::span<const double> values, double theta, std::size_t limit);
double adjust_theta(std::span<const PatternEntry> patterns, double theta, std::size_t limit);

/// Drops every entry whose measure is <= theta.
void prune_patterns(std::vector<PatternEntry>& patterns, double theta);

/// Walks a projection chain in extent space, keeping the closed patterns
/// whose projected measure exceeds the running threshold.
///
/// Cosine requires a chain ordered by ascending support; the constructor
/// throws std::invalid_argument otherwise.
class Miner {
public:
    Miner(const BinaryDataset& ds, ProjectionChain chain, MeasureKind kind,
          MinerOptions options = {});

    /// Step 0: the single top extent, pruned against `theta`.
    MinerState start(double theta, std::optional<std::size_t> limit = std::nullopt);

    /// Moves `state` from step k-1 to step k: expands each pattern into its
    /// preimages, updates measures, and drops entries with measure <= theta.
    void extend_projection(MinerState& state);

    MiningResult run_threshold(double theta);
    MiningResult run_top(std::size_t limit, double theta_min = 0.0);

    const MinerStats& stats() const noexcept { return stats_; }
    const ProjectionChain& chain() const noexcept { return chain_; }

private:
    void notify(std::size_t step, double theta, std::span<const PatternEntry> generated,
                std::span<const PatternEntry> retained);
    void check_state(const MinerState& state) const;
    void limit_patterns(MinerState& state);

    const BinaryDataset& ds_;
    ProjectionChain chain_;
    MeasureKind kind_;
    MinerOptions options_;
    MinerStats stats_;
};

/// All closed patterns with measure > theta, with their final measures.
MiningResult theta_sofia(const BinaryDataset& ds, const ProjectionChain& chain, MeasureKind kind,
                         double theta, MinerOptions options = {});

/// Adaptive-threshold variant keeping at most `limit` patterns per step.
/// The result is exactly the closed patterns with measure > result.theta.
MiningResult sofia(const BinaryDataset& ds, const ProjectionChain& chain, MeasureKind kind,
                   std::size_t limit, double theta_min = 0.0, MinerOptions options = {});

}  // namespace sofia
