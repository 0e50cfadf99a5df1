#pragma once

#include <cstddef>
#include <vector>

#include "deccs/types.hpp"

namespace deccs {

/// Hard cluster assignment of n points, labels in [0, k).
struct Partition {
  std::vector<int> labels;
  int k = 0;

  Partition() = default;
  explicit Partition(std::vector<int> l);
  Partition(std::vector<int> l, int declared_k);

  std::size_t size() const { return labels.size(); }
  void validate() const;
};

/// Renumbers labels by order of first occurrence.
Partition canonicalize(const Partition& p);

struct ContingencyTable {
  std::vector<std::vector<long long>> counts;  // k_a x k_b
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  long long n = 0;
};

ContingencyTable contingency(const Partition& a, const Partition& b);

/// Normalized mutual information with geometric-mean normalization,
/// natural-log entropies. Identical partitions give exactly 1; a
/// single-cluster partition against anything else gives 0.
double nmi(const Partition& a, const Partition& b);

/// Adjusted Rand index from pair counts.
double ari(const Partition& a, const Partition& b);

/// Mean pairwise NMI over all unordered pairs.
double agreement(const std::vector<Partition>& partitions);

/// 2/(m^2 - m) * sum of pairwise NMI; numerically equals agreement().
double consensus_objective(const std::vector<Partition>& partitions);

/// Per-partition mean NMI against the other partitions (self term excluded).
std::vector<double> lambda_weights(const std::vector<Partition>& partitions);

/// Sum of NMI between a candidate partition and every base partition.
double anmi(const Partition& candidate, const std::vector<Partition>& base);

/// Number of clusters holding at least min_fraction of the points.
int effective_k(const Partition& p, double min_fraction = 0.01);

}  // namespace deccs
