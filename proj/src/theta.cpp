#include "unimod/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace unimod {

IntMatrix ThetaTable::matrix() const {
  IntMatrix m(counts.size(), columns.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = counts[i][j];
  return m;
}

std::string ThetaTable::to_tsv() const {
  std::string out = "lattice";
  for (const auto& s : columns) out += "\t" + s.serialize();
  out += "\n";
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    out += lattices[i];
    for (const auto& c : counts[i]) out += "\t" + c.get_str();
    out += "\n";
  }
  return out;
}

std::vector<GramMatrix> enumerate_index_matrices(std::size_t g, long bound) {
  if (bound < 0 || bound % 2 != 0)
    throw std::invalid_argument("index bound must be a non-negative even integer");
  std::vector<GramMatrix> out;
  std::vector<long> diag(g, 0);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) slots.emplace_back(i, j);

  for (;;) {
    std::vector<long> limit(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const long p = diag[slots[k].first] * diag[slots[k].second];
      long r = static_cast<long>(std::sqrt(static_cast<double>(p)));
      while (r * r > p) --r;
      while ((r + 1) * (r + 1) <= p) ++r;
      limit[k] = r;
    }
    std::vector<long> off(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) off[k] = -limit[k];
    for (;;) {
      std::vector<std::vector<Int>> rows(g, std::vector<Int>(g));
      for (std::size_t i = 0; i < g; ++i) rows[i][i] = diag[i];
      for (std::size_t k = 0; k < slots.size(); ++k)
        rows[slots[k].first][slots[k].second] = rows[slots[k].second][slots[k].first] = off[k];
      GramMatrix s = GramMatrix::from_rows(rows);
      if (is_positive_semidefinite(s)) out.push_back(std::move(s));
      std::size_t k = slots.size();
      while (k > 0 && off[k - 1] == limit[k - 1]) {
        off[k - 1] = -limit[k - 1];
        --k;
      }
      if (k == 0) break;
      ++off[k - 1];
    }
    std::size_t i = g;
    while (i > 0 && diag[i - 1] == bound) {
      diag[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    diag[i - 1] += 2;
  }
  return out;
}

GramMatrix signed_permutation_canonical(const GramMatrix& s) {
  const std::size_t g = s.dim();
  if (g <= 1 || g > 6) return s;
  std::vector<long> a(g * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) a[i * g + j] = s(i, j).get_si();
  std::vector<long> best = a, cand(g * g);
  std::vector<std::size_t> perm(g);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // A global sign flip is the identity on S, so fix the first sign.
    for (unsigned mask = 0; mask < (1u << (g - 1)); ++mask) {
      auto sign = [mask](std::size_t i) { return (i > 0 && (mask >> (i - 1)) & 1u) ? -1L : 1L; };
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) cand[i * g + j] = sign(i) * sign(j) * a[perm[i] * g + perm[j]];
      if (cand < best) best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<Int>> rows(g, std::vector<Int>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) rows[i][j] = best[i * g + j];
  return GramMatrix::from_rows(rows);
}

namespace {

void check_same_rank(const std::vector<const Lattice*>& lattices) {
  for (const Lattice* l : lattices)
    if (l->rank() != lattices.front()->rank())
      throw std::invalid_argument("lattices " + lattices.front()->name + " and " + l->name +
                                  " have different ranks");
}

// Representation counts of one lattice, shared across columns that agree up
// to signed permutation.
class CountCache {
 public:
  CountCache(const Lattice& lattice, std::size_t g, long bound, const EnumOptions& options)
      : lattice_(lattice), index_(short_vectors(lattice, g == 0 ? 0 : bound, options)) {
    if (g >= 2)
      for (long a = 2; a <= bound; a += 2)
        for (long b = a; b <= bound; b += 2) index_.pair_histogram(a, b);
    if (g >= 3)
      for (long a = 2; a <= bound; a += 2)
        for (long b = 2; b <= bound; b += 2) index_.pair_bits(a, b);
  }

  // Counts for the given columns, in order.
  std::vector<Int> counts(const std::vector<GramMatrix>& columns) {
    std::vector<GramMatrix> keys(columns.size());
    std::vector<GramMatrix> missing;
    std::set<GramMatrix> queued;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      keys[j] = signed_permutation_canonical(columns[j]);
      if (!known_.count(keys[j]) && queued.insert(keys[j]).second) missing.push_back(keys[j]);
    }
    std::vector<Int> fresh(missing.size());
    detail::parallel_for(missing.size(), index_.options().threads, [&](std::size_t k) {
      fresh[k] = count_representations(lattice_, missing[k], index_, 1);
    });
    for (std::size_t k = 0; k < missing.size(); ++k) known_.emplace(missing[k], fresh[k]);
    std::vector<Int> out;
    out.reserve(columns.size());
    for (const auto& key : keys) out.push_back(known_.at(key));
    return out;
  }

 private:
  const Lattice& lattice_;
  ShortVectorIndex index_;
  std::map<GramMatrix, Int> known_;
};

}  // namespace

ThetaTable theta_table(const std::vector<Lattice>& lattices, std::size_t g, long bound,
                       const EnumOptions& options) {
  std::vector<const Lattice*> ptrs;
  for (const auto& l : lattices) ptrs.push_back(&l);
  if (!ptrs.empty()) check_same_rank(ptrs);
  ThetaTable table;
  table.columns = enumerate_index_matrices(g, bound);
  for (const auto& l : lattices) {
    table.lattices.push_back(l.name);
    CountCache cache(l, g, bound, options);
    table.counts.push_back(cache.counts(table.columns));
  }
  return table;
}

std::size_t theta_rank(const std::vector<Lattice>& lattices, std::size_t g, long bound,
                       const EnumOptions& options) {
  return exact_rank(theta_table(lattices, g, bound, options).matrix());
}

std::optional<ThetaDifference> first_difference(const Lattice& a, const Lattice& b, std::size_t g,
                                                long bound, const EnumOptions& options) {
  check_same_rank({&a, &b});
  if (a.gram == b.gram) return std::nullopt;
  const std::vector<GramMatrix> columns = enumerate_index_matrices(g, bound);
  CountCache ca(a, g, bound, options);
  CountCache cb(b, g, bound, options);
  constexpr std::size_t kBatch = 4096;
  for (std::size_t lo = 0; lo < columns.size(); lo += kBatch) {
    const std::vector<GramMatrix> batch(columns.begin() + static_cast<std::ptrdiff_t>(lo),
                                        columns.begin() + static_cast<std::ptrdiff_t>(
                                                              std::min(columns.size(), lo + kBatch)));
    const std::vector<Int> ra = ca.counts(batch);
    const std::vector<Int> rb = cb.counts(batch);
    for (std::size_t j = 0; j < batch.size(); ++j)
      if (ra[j] != rb[j]) return ThetaDifference{batch[j], ra[j], rb[j]};
  }
  return std::nullopt;
}

}  // namespace unimod
