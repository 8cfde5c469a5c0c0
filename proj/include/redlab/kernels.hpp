#pragma once

// Shared computational kernels used by the fast solvers. These are the only
// places where bit tricks and transform math live; everything above them is
// problem logic.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "redlab/core.hpp"

namespace redlab {

/// Boolean matrix product via word-parallel row ORs. The ops counter reports
/// machine-word operations and is part of the contract: scaling checks read
/// it instead of wall time.
BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b, OpCounter* ops = nullptr);

/// Exact counts of a 0/1 * 0/1 convolution: out[i] = sum_j a[j] * b[i-j].
/// Output length is |a| + |b| - 1 (0 when either input is empty).
std::vector<std::uint64_t> binary_convolution(const Sequence& a, const Sequence& b,
                                              OpCounter* ops = nullptr);

/// All-edges triangle detection with a degree split: vertices of degree
/// < delta enumerate their neighbor pairs, the heavy-only remainder goes
/// through one boolean matrix squaring. delta >= 1; 0 picks ceil(sqrt(m)).
EdgeAnswers ae_sparse_fast(const ColoredGraph& g, std::size_t delta = 0,
                           OpCounter* ops = nullptr);

/// Flags every c in C that some a + b hits, by sorting A ascending and B
/// descending and sweeping both per query.
std::vector<std::uint8_t> all_integers_3sum(const ThreeSumInstance& t, OpCounter* ops = nullptr);

/// Value frequencies over one or more sequences, fill sentinels skipped.
struct FrequencyTable {
  std::unordered_map<std::int64_t, std::size_t> counts;

  /// The t most frequent values; ties break toward the smaller value so the
  /// split is deterministic.
  std::vector<std::int64_t> top_values(std::size_t t) const;
  /// Every stored value outside the top t, ascending.
  std::vector<std::int64_t> remaining_values(std::size_t t) const;
};

FrequencyTable freq_table(std::initializer_list<const Sequence*> seqs);

}  // namespace redlab
