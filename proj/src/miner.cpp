#include <sofia/miner.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sofia {

double adjust_theta(std::span<const double> values, double theta, std::size_t limit)
{
    if (limit == 0) {
        throw std::invalid_argument("pattern limit must be at least 1");
    }
    std::vector<double> above;
    for (double v : values) {
        if (v > theta) {
            above.push_back(v);
        }
    }
    if (above.size() <= limit) {
        return theta;
    }
    std::nth_element(above.begin(), above.begin() + static_cast<std::ptrdiff_t>(limit), above.end(),
                     std::greater<>());
    return above[limit];
}

double adjust_theta(std::span<const PatternEntry> patterns, double theta, std::size_t limit)
{
    std::vector<double> values;
    values.reserve(patterns.size());
    for (const auto& p : patterns) {
        values.push_back(p.measure.value);
    }
    return adjust_theta(values, theta, limit);
}

void prune_patterns(std::vector<PatternEntry>& patterns, double theta)
{
    std::erase_if(patterns, [theta](const PatternEntry& p) { return p.measure.value <= theta; });
}

Miner::Miner(const BinaryDataset& ds, ProjectionChain chain, MeasureKind kind, MinerOptions options)
    : ds_(ds), chain_(std::move(chain)), kind_(kind), options_(std::move(options))
{
    if (chain_.n_steps() != ds_.n_items()) {
        throw std::invalid_argument("projection chain does not match the dataset");
    }
    if (kind_ == MeasureKind::cosine && !is_ascending_support(ds_, chain_)) {
        throw std::invalid_argument(
            "cosine is only projection-antimonotonic along an ascending-support chain");
    }
}

void Miner::notify(std::size_t step, double theta, std::span<const PatternEntry> generated,
                   std::span<const PatternEntry> retained)
{
    if (options_.on_step) {
        options_.on_step(StepEvent{step, theta, generated, retained});
    }
}

MinerState Miner::start(double theta, std::optional<std::size_t> limit)
{
    stats_ = MinerStats{};
    stats_.steps = chain_.n_steps();

    MinerState state;
    state.theta = theta;
    state.limit = limit;
    Tidset top = ds_.all_transactions();
    PatternEntry entry{top, evaluate(ds_, chain_, 0, top, kind_), top.count()};
    std::vector<PatternEntry> generated{entry};
    state.patterns = generated;
    prune_patterns(state.patterns, theta);
    notify(0, theta, generated, state.patterns);
    return state;
}

void Miner::extend_projection(MinerState& state)
{
    const std::size_t k = state.step + 1;
    const ItemId added = chain_.added_at(k);
    const Tidset& column = ds_.column(added);

    stats_.max_patterns = std::max(stats_.max_patterns, state.patterns.size());

    std::vector<PatternEntry> generated;
    generated.reserve(2 * state.patterns.size());
    for (auto& p : state.patterns) {
        auto images = preimages(ds_, chain_, k, p.extent);
        stats_.preimage_evaluations += images.size();

        // images[0] is p itself, now closed at step k.
        PatternEntry kept = std::move(p);
        switch (kind_) {
        case MeasureKind::delta:
            kept.measure.value = static_cast<double>(
                delta_step_update(static_cast<std::size_t>(kept.measure.value), kept.extent, column));
            break;
        case MeasureKind::cosine:
            if (kept.extent.is_subset_of(column)) {
                kept.measure = evaluate(ds_, chain_, k, kept.extent, kind_);
            }
            break;
        case MeasureKind::support:
            break;
        }
        generated.push_back(std::move(kept));

        if (images.size() > 1) {
            Tidset& child = images[1];
            MeasureValue m = evaluate(ds_, chain_, k, child, kind_);
            const std::size_t sup = child.count();
            generated.push_back(PatternEntry{std::move(child), m, sup});
        }
    }
    std::sort(generated.begin(), generated.end(),
              [](const PatternEntry& a, const PatternEntry& b) { return a.extent < b.extent; });

    state.step = k;
    state.patterns = generated;
    prune_patterns(state.patterns, state.theta);
    if (options_.verify) {
        MinerState all{k, generated, state.theta, state.limit};
        check_state(all);
    }
    notify(k, state.theta, generated, state.patterns);
}

void Miner::check_state(const MinerState& state) const
{
    for (std::size_t i = 0; i < state.patterns.size(); ++i) {
        const auto& p = state.patterns[i];
        if (i > 0 && !(state.patterns[i - 1].extent < p.extent)) {
            throw std::logic_error("duplicate extent at step " + std::to_string(state.step));
        }
        if (project_extent(ds_, chain_, state.step, p.extent) != p.extent) {
            throw std::logic_error("non-closed extent at step " + std::to_string(state.step));
        }
        const MeasureValue fresh = evaluate(ds_, chain_, state.step, p.extent, kind_);
        if (fresh.value != p.measure.value) {
            throw std::logic_error("cached " + std::string(to_string(kind_)) +
                                   " differs from recomputation at step " +
                                   std::to_string(state.step));
        }
        if (p.support != p.extent.count()) {
            throw std::logic_error("stale support cache");
        }
    }
}

void Miner::limit_patterns(MinerState& state)
{
    if (!state.limit) {
        return;
    }
    state.theta = adjust_theta(state.patterns, state.theta, *state.limit);
    prune_patterns(state.patterns, state.theta);
    if (state.patterns.size() > *state.limit) {
        throw std::logic_error("pattern limit exceeded after threshold adjustment");
    }
}

MiningResult Miner::run_threshold(double theta)
{
    MinerState state = start(theta);
    while (state.step < chain_.n_steps()) {
        extend_projection(state);
    }
    stats_.max_patterns = std::max(stats_.max_patterns, state.patterns.size());
    return MiningResult{state.theta, std::move(state.patterns), stats_};
}

MiningResult Miner::run_top(std::size_t limit, double theta_min)
{
    if (limit == 0) {
        throw std::invalid_argument("pattern limit must be at least 1");
    }
    MinerState state = start(theta_min, limit);
    while (state.step < chain_.n_steps()) {
        limit_patterns(state);
        extend_projection(state);
    }
    limit_patterns(state);
    stats_.max_patterns = std::max(stats_.max_patterns, state.patterns.size());
    return MiningResult{state.theta, std::move(state.patterns), stats_};
}

MiningResult theta_sofia(const BinaryDataset& ds, const ProjectionChain& chain, MeasureKind kind,
                         double theta, MinerOptions options)
{
    Miner miner(ds, chain, kind, std::move(options));
    return miner.run_threshold(theta);
}

MiningResult sofia(const BinaryDataset& ds, const ProjectionChain& chain, MeasureKind kind,
                   std::size_t limit, double theta_min, MinerOptions options)
{
    Miner miner(ds, chain, kind, std::move(options));
    return miner.run_top(limit, theta_min);
}

}  // namespace sofia
