#pragma once

// Output-equivalent fast counterparts of the brute-force solvers. Same
// answers, better growth; equivalence is enforced by randomized comparison
// suites, so nothing here may approximate.

#include <optional>

#include "redlab/core.hpp"

namespace redlab {

/// How many of the largest color classes (or most frequent values) take the
/// dense path; the rest go through the sparse machinery. Answers never
/// depend on the choice, only the operation counts do.
struct BucketingParams {
  std::size_t t = 0;
};

/// ceil(n^(1/4)), the default class budget for mono_triangle_fast.
BucketingParams default_graph_bucketing(std::size_t n);
/// ceil(sqrt(n)), the default value budget for mono_convolution_fast.
BucketingParams default_value_bucketing(std::size_t n);

/// Monochromatic-triangle answers per edge: the t largest color classes are
/// squared as boolean matrices on their touched vertices, every other class
/// runs the degree-split triangle solver on its own subgraph.
EdgeAnswers mono_triangle_fast(const ColoredGraph& g,
                               std::optional<BucketingParams> params = std::nullopt,
                               OpCounter* ops = nullptr);

/// Mono convolution: the t most frequent values are tested with one exact
/// binary convolution of their indicator vectors each; the remaining values
/// become index-space instances of the all-integers three-sum kernel.
std::vector<std::uint8_t> mono_convolution_fast(const Sequence& a, const Sequence& b,
                                                const Sequence& c,
                                                std::optional<BucketingParams> params = std::nullopt,
                                                OpCounter* ops = nullptr);

/// Coin change for all values 1..n: coins >= ceil(sqrt(n)) are resolved in
/// at most ceil(sqrt(n)) reachability rounds of binary convolutions, the
/// small coins finish with an ascending dynamic program on top.
std::vector<ExtInt> coin_change_fast(const CoinChangeInstance& inst, OpCounter* ops = nullptr);

}  // namespace redlab
