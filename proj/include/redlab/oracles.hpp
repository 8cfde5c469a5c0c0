#pragma once

// Brute-force reference solvers. Each one is written from the problem
// definition alone and shares no subroutines with the fast paths, so a bug
// would have to appear twice independently to slip through comparisons.

#include "redlab/core.hpp"

namespace redlab {

/// For every edge (u,v,c): is there a w with (u,w) and (w,v) both colored c?
EdgeAnswers oracle_ae_mono(const ColoredGraph& g, OpCounter* ops = nullptr);

/// Same scan with colors ignored: is the edge in any triangle?
EdgeAnswers oracle_ae_sparse(const ColoredGraph& g, OpCounter* ops = nullptr);

/// C[i][j] = min over k of max(A[i][k], B[k][j]).
ExtMatrix oracle_minmax(const ExtMatrix& a, const ExtMatrix& b, OpCounter* ops = nullptr);

/// C[i][j] = smallest k with A[i][k] = B[k][j] = 1, INF when none exists.
ExtMatrix oracle_minwitness(const BoolMatrix& a, const BoolMatrix& b, OpCounter* ops = nullptr);

/// Unweighted directed all-pairs distances by BFS from every source.
ExtMatrix oracle_apsp(const DirectedGraph& g, OpCounter* ops = nullptr);

/// Does some a in A, b in B, c in C satisfy a + b = c?
bool oracle_3sum(const ThreeSumInstance& t, OpCounter* ops = nullptr);

/// Per-element variant: flag each c in C that completes some a + b = c.
std::vector<std::uint8_t> oracle_allints_3sum(const ThreeSumInstance& t, OpCounter* ops = nullptr);

/// d[i] = 1 iff some j <= i has a[j] = b[i-j] = c[i] with c[i] not a fill
/// sentinel.
std::vector<std::uint8_t> oracle_monoconv(const Sequence& a, const Sequence& b,
                                          const Sequence& c, OpCounter* ops = nullptr);

/// Minimum number of coins (with repetition) summing to each v in 0..n,
/// INF when unreachable. Entry 0 is always 0.
std::vector<ExtInt> oracle_coinchange(const CoinChangeInstance& inst, OpCounter* ops = nullptr);

}  // namespace redlab
