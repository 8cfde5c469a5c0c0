#pragma once

// Seeded instance generators for tests, benchmarks and the CLI.

#include <cstdint>

#include "redlab/core.hpp"
#include "redlab/io.hpp"
#include "redlab/rng.hpp"

namespace redlab {

/// Every unordered pair becomes an edge with probability p; colors are
/// uniform over [0, min(colors, n*n)). colors >= 1.
ColoredGraph gen_colored_gnp(std::size_t n, double p, std::int64_t colors, Rng& rng);

/// Every ordered pair (u, v), u != v, becomes an arc with probability p.
DirectedGraph gen_directed_gnp(std::size_t n, double p, Rng& rng);

BoolMatrix gen_bool_matrix(std::size_t rows, std::size_t cols, double density, Rng& rng);

/// Cells are INF with inf_chance, otherwise uniform in [lo, hi].
ExtMatrix gen_ext_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi,
                         double inf_chance, Rng& rng);

/// Uniform values in [0, range) for A and B, [0, 2*range) for C.
ThreeSumInstance gen_three_sum(std::size_t n, std::int64_t range, Rng& rng);

/// Same distribution, then one random c is overwritten with a random pair
/// sum so the answer is YES.
ThreeSumInstance gen_three_sum_planted(std::size_t n, std::int64_t range, Rng& rng);

/// Same distribution with every c rejected against the full pair-sum set,
/// so the answer is NO. Throws when range is too tight to avoid all sums.
ThreeSumInstance gen_three_sum_no(std::size_t n, std::int64_t range, Rng& rng);

/// Each slot is a fill sentinel with fill_chance, otherwise uniform in
/// [0, values). values >= 1.
MonoConvInstance gen_mono_conv(std::size_t n, std::int64_t values, double fill_chance, Rng& rng);

/// k distinct coins drawn from [1, n]. Requires 1 <= k <= n.
CoinChangeInstance gen_coin_change(std::int64_t n, std::size_t k, Rng& rng);

}  // namespace redlab
