#pragma once

#include <sofia/dataset.hpp>
#include <sofia/measures.hpp>
#include <sofia/miner.hpp>

#include <cstddef>
#include <vector>

// Brute-force ground truth. Everything here is exponential in some input
// dimension and meant for small datasets, tests and the baseline command.

namespace sofia::oracle {

struct Concept {
    Tidset extent;
    Itemset intent;
};

/// Largest |T| accepted by the exact stability/robustness oracle.
inline constexpr std::size_t kMaxExactTransactions = 25;

/// Every concept (A, d(A)) with |A| >= min_support, sorted by extent.
/// Close-by-One enumeration over items.
std::vector<Concept> enumerate_closed(const BinaryDataset& ds, std::size_t min_support);

/// Probability that d(e) stays closed in a uniformly drawn subdataset.
/// Throws OracleGuardError when |T| > kMaxExactTransactions.
double exact_stability(const BinaryDataset& ds, const Tidset& e);
/// Same with each transaction retained independently with probability alpha.
double exact_robustness(const BinaryDataset& ds, const Tidset& e, double alpha);

/// Δ of every concept, read off the concept set: |A| minus the largest
/// proper closed sub-extent (0 if none).
std::vector<std::size_t> lattice_deltas(const std::vector<Concept>& concepts);

/// Full-dataset measure of every non-empty concept, sorted by extent.
std::vector<PatternEntry> score_closed(const BinaryDataset& ds, MeasureKind kind);

/// Mine every closed pattern, then keep those with measure > theta.
MiningResult postprune_threshold(const BinaryDataset& ds, MeasureKind kind, double theta);

/// Mine every closed pattern, then keep the top `k` under the same
/// tie-group rule as the adaptive miner (starting from threshold 0).
MiningResult postprune_topk(const BinaryDataset& ds, MeasureKind kind, std::size_t k);

}  // namespace sofia::oracle
