#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deccs/types.hpp"

namespace deccs {

/// N x D dataset with optional ground-truth labels.
struct DataMatrix {
  Matrix values;            // one row per point
  std::vector<int> labels;  // empty, or one label per row

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
  bool has_labels() const { return !labels.empty(); }
  void validate() const;
};

/// Distinct row indices into a DataMatrix.
struct SampleIndex {
  std::vector<Index> indices;
  std::size_t size() const { return indices.size(); }
};

/// Reads a comma-separated file. A non-numeric first line is treated as a
/// header. With has_labels the last column is split off as integer labels.
DataMatrix load_dataset(const std::string& path, bool has_labels);

/// Writes values (and labels, when present) as CSV with a header line.
void save_dataset_csv(const DataMatrix& data, const std::string& path);

/// Columnwise standardization to mean 0, population std 1.
/// Constant columns map to all-zero columns.
DataMatrix z_transform(const DataMatrix& data);

// Synthetic generators. `noise` scales the built-in default levels
// (1.0 = default); all generators are pure functions of their arguments.

/// Four 2-D clusters of differing shapes: two interleaved half rings plus
/// two isotropic blobs, separated far enough for single-linkage recovery.
DataMatrix make_synth(int n_per_cluster, double noise, std::uint64_t seed);

/// Two concentric rings with radii 1 and 2.
DataMatrix make_two_rings(int n_per_ring, double noise, std::uint64_t seed);

/// Two concentric rings recentered so both clusters share the exact same mean.
DataMatrix make_collision(int n_per_cluster, std::uint64_t seed);

/// k well-separated isotropic Gaussian blobs on a grid with spacing 10.
DataMatrix make_blobs(int n_per_cluster, int k, double sigma, std::uint64_t seed);

SampleIndex sample_without_replacement(Index total, Index n, RngEngine& rng);

/// Disjoint (train, eval) split of the given indices; eval gets
/// round(eval_fraction * n), at least one element.
std::pair<SampleIndex, SampleIndex> split_train_eval(const SampleIndex& index,
                                                     double eval_fraction,
                                                     RngEngine& rng);

Matrix gather_rows(const Matrix& m, const std::vector<Index>& rows);

}  // namespace deccs
