#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "oracles.hpp"
#include "unimod/enumerate.hpp"
#include "unimod/errors.hpp"
#include "unimod/lattice.hpp"
#include "unimod/theta.hpp"

using namespace unimod;

namespace {

std::uint64_t oracle_count(const oracle::PointSet& p, const GramMatrix& s) {
  if (s.dim() == 0) return 1;
  if (s.dim() == 1) {
    auto it = p.by_norm.find(s(0, 0).get_si());
    return it == p.by_norm.end() ? 0 : it->second.size();
  }
  REQUIRE(s.dim() == 2);
  const auto h = oracle::pair_counts(p, s(0, 0).get_si(), s(1, 1).get_si());
  auto it = h.find(s(0, 1).get_si());
  return it == h.end() ? 0 : it->second;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-1, 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int k = f(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  return u;
}

GramMatrix signed_permuted(const GramMatrix& s, std::mt19937& rng) {
  const std::size_t n = s.dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sign(n);
  for (auto& x : sign) x = (rng() & 1) ? -1 : 1;
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sign[i] * sign[j] * s(perm[i], perm[j]);
  return GramMatrix::from_rows(rows);
}

long norm_of(const GramMatrix& g, std::span<const std::int16_t> v) {
  long s = 0;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) s += g(i, j).get_si() * v[i] * v[j];
  return s;
}

}  // namespace

TEST_CASE("E8 norm counts against the orthogonal model") {
  const auto model = oracle::e8(4);
  CHECK(model.by_norm.at(2).size() == 240);
  CHECK(model.by_norm.at(4).size() == 2160);
  const auto counts = count_by_norm(builtin("E8"), 4);
  CHECK(counts.at(2) == 240);
  CHECK(counts.at(4) == 2160);
}

TEST_CASE("A1^24 norm counts against the Golay model") {
  const auto code = oracle::golay_code();
  CHECK(code.size() == 4096);
  std::map<int, int> weights;
  for (auto w : code) ++weights[__builtin_popcount(w)];
  CHECK(weights == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  const auto model = oracle::a1_24(4);
  const auto counts = count_by_norm(builtin("Niemeier(A1^24)"), 4);
  CHECK(counts.at(2) == model.by_norm.at(2).size());
  CHECK(counts.at(4) == model.by_norm.at(4).size());
  CHECK(counts.at(4) == 195408);
}

TEST_CASE("index buckets are sorted, exact and closed under negation") {
  const Lattice e8 = builtin("E8");
  const auto idx = short_vectors(e8, 4);
  CHECK(idx.total() == 2400);
  CHECK(idx.bucket_size(3) == 0);
  CHECK(idx.bucket_size(6) == 0);
  for (long n : {2L, 4L}) {
    std::set<std::vector<std::int16_t>> seen;
    for (std::size_t i = 0; i < idx.bucket_size(n); ++i) {
      const auto v = idx.vector(n, i);
      CHECK(norm_of(e8.gram, v) == n);
      std::vector<std::int16_t> x(v.begin(), v.end());
      if (i > 0) {
        const auto p = idx.vector(n, i - 1);
        CHECK(std::lexicographical_compare(p.begin(), p.end(), v.begin(), v.end()));
      }
      seen.insert(x);
    }
    for (auto x : seen) {
      for (auto& c : x) c = std::int16_t(-c);
      CHECK(seen.count(x) == 1);
    }
  }
  CHECK(idx.inner_product(2, 0, 2, 0) == 2);
  CHECK_THROWS_AS(idx.vector(2, 240), std::out_of_range);
}

TEST_CASE("pair histograms against the naive double loop") {
  const auto e8 = short_vectors(builtin("E8"), 4);
  const auto model = oracle::e8(4);
  for (auto [a, b] : {std::pair{2L, 2L}, {2L, 4L}, {4L, 2L}, {4L, 4L}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto& h = e8.pair_histogram(a, b);
    const auto want = oracle::pair_counts(model, a, b);
    for (long c = -h.max_ip; c <= h.max_ip; ++c) {
      auto it = want.find(c);
      CHECK(h.at(c) == (it == want.end() ? 0 : it->second));
    }
  }
  const auto a1 = short_vectors(builtin("Niemeier(A1^24)"), 4);
  const auto a1_model = oracle::a1_24(4);
  for (auto [a, b] : {std::pair{2L, 2L}, {2L, 4L}}) {
    const auto& h = a1.pair_histogram(a, b);
    const auto want = oracle::pair_counts(a1_model, a, b);
    for (long c = -h.max_ip; c <= h.max_ip; ++c) {
      auto it = want.find(c);
      CHECK(h.at(c) == (it == want.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("E8 representation counts for all index matrices of size <= 2, bound 4") {
  const Lattice e8 = builtin("E8");
  const auto idx = short_vectors(e8, 4);
  const auto model = oracle::e8(4);
  for (std::size_t g = 0; g <= 2; ++g)
    for (const auto& s : enumerate_index_matrices(g, 4)) {
      CAPTURE(s.serialize());
      CHECK(count_representations(e8, s, idx) == oracle_count(model, s));
    }
  CHECK(count_representations(e8, GramMatrix::from_rows({{2, 1}, {1, 2}}), idx) == 13440);
  CHECK(count_representations(e8, GramMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}), idx) == 362880);
}

TEST_CASE("E8 triple counts against the naive triple loop") {
  const Lattice e8 = builtin("E8");
  const auto idx = short_vectors(e8, 2);
  const auto model = oracle::e8(2);
  for (const auto& s : enumerate_index_matrices(3, 2)) {
    CAPTURE(s.serialize());
    std::array<std::array<long, 3>, 3> t{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i][j] = s(i, j).get_si();
    CHECK(count_representations(e8, s, idx) == oracle::triple_count(model, t));
  }
}

TEST_CASE("non-even or indefinite index matrices are never represented") {
  const Lattice e8 = builtin("E8");
  const auto idx = short_vectors(e8, 4);
  CHECK(count_representations(e8, GramMatrix::from_rows({{1}}), idx) == 0);
  CHECK(count_representations(e8, GramMatrix::from_rows({{2, 3}, {3, 2}}), idx) == 0);
  CHECK(count_representations(e8, GramMatrix::from_rows({{0, 1}, {1, 2}}), idx) == 0);
  CHECK(count_representations(e8, GramMatrix::from_rows({{2, 2}, {2, 2}}), idx) == 240);
  CHECK(count_representations(e8, GramMatrix::from_rows({{2, -2}, {-2, 2}}), idx) == 240);
  CHECK(count_representations(e8, GramMatrix(), idx) == 1);
}

TEST_CASE("property: counts are invariant under signed permutations of S") {
  std::mt19937 rng(21);
  const Lattice l = builtin("E8^2");
  const auto idx = short_vectors(l, 4);
  const auto cols = enumerate_index_matrices(3, 2);
  std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
  for (int t = 0; t < 40; ++t) {
    const GramMatrix& s = cols[pick(rng)];
    CAPTURE(s.serialize());
    CHECK(count_representations(l, s, idx) == count_representations(l, signed_permuted(s, rng), idx));
  }
}

TEST_CASE("property: counts do not depend on the lattice basis") {
  std::mt19937 rng(22);
  const Lattice e8 = builtin("E8");
  const auto idx = short_vectors(e8, 4);
  const auto cols = enumerate_index_matrices(2, 4);
  for (int t = 0; t < 5; ++t) {
    Lattice moved{"E8 moved", e8.gram.transformed(random_unimodular(rng, 8, 30)), {}, {}};
    const auto midx = short_vectors(moved, 4);
    CHECK(midx.bucket_size(2) == 240);
    CHECK(midx.bucket_size(4) == 2160);
    for (std::size_t k = 0; k < cols.size(); k += 3)
      CHECK(count_representations(moved, cols[k], midx) == count_representations(e8, cols[k], idx));
  }
}

TEST_CASE("property: thread count does not change results") {
  const Lattice l = builtin("D16+");
  const auto idx = short_vectors(l, 2);
  for (const auto& s : enumerate_index_matrices(3, 2)) {
    const Int one = count_representations(l, s, idx, 1);
    CHECK(count_representations(l, s, idx, 3) == one);
    CHECK(count_representations(l, s, idx, 8) == one);
  }
}

TEST_CASE("bound and capacity errors") {
  const Lattice e8 = builtin("E8");
  const auto idx = short_vectors(e8, 2);
  CHECK_THROWS_AS(count_representations(e8, GramMatrix::from_rows({{4}}), idx), BoundTooSmall);
  CHECK_THROWS_AS(short_vectors(e8, 3), std::invalid_argument);
  CHECK_THROWS_AS(short_vectors(e8, -2), std::invalid_argument);
  EnumOptions tiny;
  tiny.max_vectors = 100;
  CHECK_THROWS_AS(short_vectors(e8, 2, tiny), CapacityExceeded);
  tiny.max_vectors = 240;
  CHECK(short_vectors(e8, 2, tiny).total() == 240);
  CHECK_THROWS_AS(count_representations(builtin("D16+"), GramMatrix::from_rows({{2}}), idx),
                  std::invalid_argument);
  CHECK(short_vectors(e8, 0).total() == 0);
}

TEST_CASE("annotate fills minimum and kissing number") {
  Lattice e8 = builtin("E8");
  annotate(e8);
  CHECK(e8.min_norm == 2);
  CHECK(e8.kissing_number == 240);
}
