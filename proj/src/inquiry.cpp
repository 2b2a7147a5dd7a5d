#include "inquest/inquiry.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "inquest/errors.hpp"

namespace inquest {

void validate_distribution(const Distribution& d, double tol) {
  if (d.p.empty()) {
    throw ValidationError("distribution has no entries");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < d.p.size(); ++i) {
    const double v = d.p[i];
    if (!(v >= 0.0)) {  // also catches NaN
      throw ValidationError("distribution entry " + std::to_string(i) +
                            " is negative or NaN: " + std::to_string(v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ValidationError("distribution sums to " + std::to_string(sum) +
                          ", expected 1 within " + std::to_string(tol));
  }
}

void validate_partition(const Partition& part, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const auto& block = part.blocks[b];
    if (block.empty()) {
      throw ValidationError("partition block " + std::to_string(b) +
                            " is empty");
    }
    for (std::size_t idx : block) {
      if (idx >= n) {
        throw ValidationError("partition index " + std::to_string(idx) +
                              " out of range for " + std::to_string(n) +
                              " states");
      }
      if (seen[idx]) {
        throw ValidationError("partition repeats index " +
                              std::to_string(idx));
      }
      seen[idx] = true;
      ++covered;
    }
  }
  if (covered != n) {
    throw ValidationError("partition covers " + std::to_string(covered) +
                          " of " + std::to_string(n) + " states");
  }
}

double shannon_entropy(const Distribution& d) {
  validate_distribution(d);
  double h = 0.0;
  for (double v : d.p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h < 0.0 ? 0.0 : h;  // -0.0 guard for degenerate distributions
}

Distribution coarsen(const Distribution& d, const Partition& part) {
  validate_distribution(d);
  validate_partition(part, d.p.size());
  Distribution out;
  out.p.reserve(part.blocks.size());
  for (const auto& block : part.blocks) {
    double s = 0.0;
    for (std::size_t idx : block) s += d.p[idx];
    out.p.push_back(s);
  }
  return out;
}

double relevance(const Distribution& d, const Partition& part) {
  validate_distribution(d);
  validate_partition(part, d.p.size());
  const double base = shannon_entropy(d);
  if (base <= 0.0) {
    throw UndefinedRelevanceError(
        "relevance undefined: the issue's entropy is 0 (state fully "
        "determined)");
  }
  bool all_singletons = true;
  for (const auto& block : part.blocks) {
    if (block.size() != 1) {
      all_singletons = false;
      break;
    }
  }
  if (all_singletons) return 1.0;
  const double ratio = shannon_entropy(coarsen(d, part)) / base;
  if (ratio < 0.0) return 0.0;
  if (ratio > 1.0) return 1.0;
  return ratio;
}

BigUint partition_count(std::uint64_t n, std::uint64_t max_n) {
  if (n > max_n) {
    throw RangeError("partition_count argument " + std::to_string(n) +
                     " exceeds bound " + std::to_string(max_n));
  }
  // Coefficients of prod_{k>=1} 1/(1-x^k) up to x^n: fold in one factor
  // at a time; dp[j] accumulates the partition count of j using parts <= k.
  std::vector<BigUint> dp(static_cast<std::size_t>(n) + 1, BigUint(0));
  dp[0] = BigUint(1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = k; j <= n; ++j) {
      dp[j] += dp[j - k];
    }
  }
  return dp[static_cast<std::size_t>(n)];
}

}  // namespace inquest
