#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "redlab/gen.hpp"
#include "redlab/kernels.hpp"
#include "redlab/oracles.hpp"
#include "redlab/rng.hpp"

using namespace redlab;

namespace {

BoolMatrix bool_from(std::initializer_list<std::initializer_list<int>> rows) {
  BoolMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m.set(i, j++, v != 0);
    ++i;
  }
  return m;
}

BoolMatrix naive_matmul(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      for (std::size_t k = 0; k < a.cols; ++k)
        if (a.get(i, k) && b.get(k, j)) {
          c.set(i, j, true);
          break;
        }
  return c;
}

std::vector<std::uint64_t> naive_convolution(const Sequence& a, const Sequence& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[j]);
  return out;
}

}  // namespace

TEST_CASE("binary convolution, worked examples") {
  CHECK(binary_convolution({1, 1}, {1, 1}) == std::vector<std::uint64_t>{1, 2, 1});
  CHECK(binary_convolution({1, 0, 1}, {1, 1, 0}) == std::vector<std::uint64_t>{1, 1, 1, 1, 0});
}

TEST_CASE("binary convolution of empty inputs is empty") {
  CHECK(binary_convolution({}, {1, 1}).empty());
  CHECK(binary_convolution({1}, {}).empty());
}

TEST_CASE("binary convolution matches the quadratic sum across the transform cutoff") {
  Rng rng(41);
  for (std::size_t na = 1; na <= 40; ++na) {
    const std::size_t nb = 1 + rand_below(rng, 40);
    Sequence a(na), b(nb);
    for (auto& v : a) v = rand_chance(rng, 0.5) ? 1 : 0;
    for (auto& v : b) v = rand_chance(rng, 0.5) ? 1 : 0;
    CHECK(binary_convolution(a, b) == naive_convolution(a, b));
  }
}

TEST_CASE("binary convolution counts work") {
  OpCounter ops;
  binary_convolution(Sequence(100, 1), Sequence(100, 1), &ops);
  CHECK(ops.ops > 0);
}

TEST_CASE("boolean matrix product, worked example") {
  const BoolMatrix a = bool_from({{1, 0}, {0, 0}});
  const BoolMatrix b = bool_from({{0, 1}, {1, 1}});
  CHECK(bool_matmul(a, b) == bool_from({{0, 1}, {0, 0}}));
}

TEST_CASE("boolean matrix product matches the cubic scan, including word padding") {
  Rng rng(7);
  for (const std::size_t n : {1, 2, 5, 17, 63, 64, 65, 70}) {
    const BoolMatrix a = gen_bool_matrix(n, n, 0.3, rng);
    const BoolMatrix b = gen_bool_matrix(n, n, 0.3, rng);
    CHECK(bool_matmul(a, b) == naive_matmul(a, b));
  }
}

TEST_CASE("boolean matrix product keeps padding bits zero") {
  Rng rng(8);
  const BoolMatrix a = gen_bool_matrix(70, 70, 0.5, rng);
  const BoolMatrix c = bool_matmul(a, a);
  for (std::size_t i = 0; i < c.rows; ++i)
    for (std::size_t j = c.cols; j < c.words_per_row * 64; ++j)
      CHECK(((c.row(i)[j >> 6] >> (j & 63)) & 1u) == 0);
}

TEST_CASE("degree-split triangle answers match the scan for any threshold") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rand_below(rng, 20);
    const ColoredGraph g = gen_colored_gnp(n, 0.35, 1, rng);
    const EdgeAnswers want = oracle_ae_sparse(g);
    for (const std::size_t delta : {std::size_t{0}, std::size_t{1}, std::size_t{10}})
      CHECK(ae_sparse_fast(g, delta) == want);
  }
}

TEST_CASE("degree split on a dense graph, extreme thresholds agree") {
  Rng rng(12);
  const ColoredGraph g = gen_colored_gnp(40, 0.8, 1, rng);
  const EdgeAnswers want = oracle_ae_sparse(g);
  CHECK(ae_sparse_fast(g, 1) == want);       // everything heavy
  CHECK(ae_sparse_fast(g, 1000) == want);    // everything light
}

TEST_CASE("all-integers sweep flags exactly the reachable targets") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const ThreeSumInstance t = gen_three_sum(2 + rand_below(rng, 60), 50, rng);
    CHECK(all_integers_3sum(t) == oracle_allints_3sum(t));
  }
}

TEST_CASE("all-integers sweep handles negatives and duplicates") {
  ThreeSumInstance t;
  t.a = {-5, 0, 3, 3};
  t.b = {-1, 4, 4};
  t.c = {-6, 2, 7, 7, 100};
  CHECK(all_integers_3sum(t) == std::vector<std::uint8_t>{1, 1, 1, 1, 0});
}

TEST_CASE("frequency table, worked example") {
  const Sequence a = {5, 5};
  const Sequence b = {5};
  const Sequence c = {7};
  const FrequencyTable table = freq_table({&a, &b, &c});
  CHECK(table.counts.at(5) == 3);
  CHECK(table.counts.at(7) == 1);
  CHECK(table.top_values(1) == std::vector<std::int64_t>{5});
  CHECK(table.remaining_values(1) == std::vector<std::int64_t>{7});
}

TEST_CASE("frequency table skips fill sentinels and partitions values") {
  const Sequence a = {4, kNoneA, 4, 9};
  const Sequence b = {9, kNoneB, 2};
  const Sequence c = {kNoneC, 2, 2};
  const FrequencyTable table = freq_table({&a, &b, &c});
  CHECK(table.counts.size() == 3);
  CHECK(table.counts.at(2) == 3);
  CHECK(table.counts.at(4) == 2);
  CHECK(table.counts.at(9) == 2);
  for (std::size_t t = 0; t <= 4; ++t) {
    std::vector<std::int64_t> all = table.top_values(t);
    const std::vector<std::int64_t> rest = table.remaining_values(t);
    all.insert(all.end(), rest.begin(), rest.end());
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<std::int64_t>{2, 4, 9});
  }
}

TEST_CASE("frequency ties break toward the smaller value") {
  const Sequence a = {8, 3, 8, 3};
  const FrequencyTable table = freq_table({&a});
  CHECK(table.top_values(1) == std::vector<std::int64_t>{3});
  CHECK(table.remaining_values(1) == std::vector<std::int64_t>{8});
}
