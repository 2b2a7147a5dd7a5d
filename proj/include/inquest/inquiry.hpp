#pragma once

// Entropy, partition coarsening, relevance ratios, and exact integer
// partition counts.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "inquest/bigint.hpp"

namespace inquest {

// A discrete probability distribution over atomic states.
// Probabilities must be non-negative and sum to 1 within tolerance.
struct Distribution {
  std::vector<double> p;

  std::size_t size() const { return p.size(); }
};

// A partition of atomic state indices into disjoint, exhaustive blocks.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;
};

// Validates a distribution: non-negative entries, sums to 1 within `tol`.
// Throws ValidationError on violation.
void validate_distribution(const Distribution& d, double tol = 1e-9);

// Validates a partition against a state count: every index in [0, n)
// exactly once across all blocks. Throws ValidationError on violation.
void validate_partition(const Partition& part, std::size_t n);

// Shannon entropy in bits; 0·log(0) terms contribute zero.
double shannon_entropy(const Distribution& d);

// Sums probabilities within each block to form the coarsened distribution.
Distribution coarsen(const Distribution& d, const Partition& part);

// Relevance of the question induced by `part` to the issue with
// distribution `d`: H(coarsened) / H(full). Returns exactly 1.0 when the
// partition is the discrete partition (all singleton blocks). Throws
// UndefinedRelevanceError when H(full) == 0.
double relevance(const Distribution& d, const Partition& part);

// Exact number of integer partitions of n, computed with exact big-integer
// arithmetic. Throws RangeError when n > max_n.
BigUint partition_count(std::uint64_t n, std::uint64_t max_n = 200);

}  // namespace inquest
