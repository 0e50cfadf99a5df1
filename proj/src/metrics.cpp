#include "deccs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace deccs {

Partition::Partition(std::vector<int> l) : labels(std::move(l)) {
  int max_label = -1;
  for (int v : labels) max_label = std::max(max_label, v);
  k = max_label + 1;
  validate();
}

Partition::Partition(std::vector<int> l, int declared_k) : labels(std::move(l)), k(declared_k) {
  validate();
}

void Partition::validate() const {
  if (labels.empty()) throw std::invalid_argument("partition must cover at least one point");
  if (k < 1) throw std::invalid_argument("partition needs at least one cluster");
  for (int v : labels) {
    if (v < 0 || v >= k) throw std::invalid_argument("partition label out of range [0, k)");
  }
}

Partition canonicalize(const Partition& p) {
  std::vector<int> remap(static_cast<std::size_t>(p.k), -1);
  std::vector<int> out(p.labels.size());
  int next = 0;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    int& slot = remap[static_cast<std::size_t>(p.labels[i])];
    if (slot < 0) slot = next++;
    out[i] = slot;
  }
  return Partition(std::move(out), next);
}

ContingencyTable contingency(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("contingency: partition lengths differ");
  ContingencyTable t;
  t.n = static_cast<long long>(a.size());
  t.counts.assign(static_cast<std::size_t>(a.k), std::vector<long long>(static_cast<std::size_t>(b.k), 0));
  t.row_sums.assign(static_cast<std::size_t>(a.k), 0);
  t.col_sums.assign(static_cast<std::size_t>(b.k), 0);
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    ++t.counts[static_cast<std::size_t>(a.labels[i])][static_cast<std::size_t>(b.labels[i])];
    ++t.row_sums[static_cast<std::size_t>(a.labels[i])];
    ++t.col_sums[static_cast<std::size_t>(b.labels[i])];
  }
  return t;
}

namespace {

double entropy(const std::vector<long long>& sums, double n) {
  double h = 0.0;
  for (long long s : sums) {
    if (s > 0) {
      double p = static_cast<double>(s) / n;
      h -= p * std::log(p);
    }
  }
  return h;
}

// Canonical argument order makes nmi/ari bitwise symmetric and
// relabel-invariant: both call orders build the same table.
std::pair<Partition, Partition> ordered_pair(const Partition& a, const Partition& b) {
  Partition ca = canonicalize(a);
  Partition cb = canonicalize(b);
  if (cb.labels < ca.labels) std::swap(ca, cb);
  return {std::move(ca), std::move(cb)};
}

double comb2(long long v) {
  return 0.5 * static_cast<double>(v) * static_cast<double>(v - 1);
}

}  // namespace

double nmi(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("nmi: partition lengths differ");
  auto [x, y] = ordered_pair(a, b);
  if (x.labels == y.labels) return 1.0;

  ContingencyTable t = contingency(x, y);
  double n = static_cast<double>(t.n);
  double ha = entropy(t.row_sums, n);
  double hb = entropy(t.col_sums, n);
  if (ha == 0.0 || hb == 0.0) return 0.0;  // single-cluster vs. non-identical partition

  double info = 0.0;
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
      long long c = t.counts[i][j];
      if (c > 0) {
        double pij = static_cast<double>(c) / n;
        info += pij * std::log(n * static_cast<double>(c) /
                               (static_cast<double>(t.row_sums[i]) * static_cast<double>(t.col_sums[j])));
      }
    }
  }
  double v = info / std::sqrt(ha * hb);
  return std::clamp(v, 0.0, 1.0);
}

double ari(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ari: partition lengths differ");
  if (a.size() < 2) throw std::invalid_argument("ari: need at least two points");
  auto [x, y] = ordered_pair(a, b);

  ContingencyTable t = contingency(x, y);
  double sum_ij = 0.0;
  for (const auto& row : t.counts)
    for (long long c : row) sum_ij += comb2(c);
  double sum_a = 0.0, sum_b = 0.0;
  for (long long s : t.row_sums) sum_a += comb2(s);
  for (long long s : t.col_sums) sum_b += comb2(s);
  double total_pairs = comb2(t.n);

  double expected = sum_a * sum_b / total_pairs;
  double max_index = 0.5 * (sum_a + sum_b);
  double denom = max_index - expected;
  if (denom == 0.0) return 1.0;  // both partitions trivial and identical in pair terms
  return (sum_ij - expected) / denom;
}

namespace {

std::vector<std::vector<double>> pairwise_nmi(const std::vector<Partition>& ps) {
  const std::size_t m = ps.size();
  std::vector<std::vector<double>> v(m, std::vector<double>(m, 1.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      v[i][j] = v[j][i] = nmi(ps[i], ps[j]);
    }
  }
  return v;
}

void require_pairable(const std::vector<Partition>& ps) {
  if (ps.size() < 2) throw std::invalid_argument("need at least two partitions");
  for (const auto& p : ps) {
    if (p.size() != ps.front().size()) throw std::invalid_argument("partition lengths differ");
  }
}

}  // namespace

double agreement(const std::vector<Partition>& partitions) {
  require_pairable(partitions);
  const std::size_t m = partitions.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sum += nmi(partitions[i], partitions[j]);
  return sum / (0.5 * static_cast<double>(m) * static_cast<double>(m - 1));
}

double consensus_objective(const std::vector<Partition>& partitions) {
  require_pairable(partitions);
  const std::size_t m = partitions.size();
  double c = 2.0 / (static_cast<double>(m) * static_cast<double>(m) - static_cast<double>(m));
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sum += nmi(partitions[i], partitions[j]);
  return c * sum;
}

std::vector<double> lambda_weights(const std::vector<Partition>& partitions) {
  require_pairable(partitions);
  const std::size_t m = partitions.size();
  auto table = pairwise_nmi(partitions);
  std::vector<double> lambda(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) sum += table[i][j];
    }
    lambda[i] = sum / static_cast<double>(m - 1);
  }
  return lambda;
}

double anmi(const Partition& candidate, const std::vector<Partition>& base) {
  if (base.empty()) throw std::invalid_argument("anmi: empty base ensemble");
  double sum = 0.0;
  for (const auto& p : base) sum += nmi(p, candidate);
  return sum;
}

int effective_k(const Partition& p, double min_fraction) {
  std::vector<long long> counts(static_cast<std::size_t>(p.k), 0);
  for (int v : p.labels) ++counts[static_cast<std::size_t>(v)];
  double threshold = min_fraction * static_cast<double>(p.size());
  int present = 0;
  for (long long c : counts) {
    if (static_cast<double>(c) >= threshold && c > 0) ++present;
  }
  return present;
}

}  // namespace deccs
