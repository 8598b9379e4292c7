#include "unimod/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "reduce.hpp"
#include "unimod/errors.hpp"

namespace unimod {

namespace {

constexpr std::size_t kShards = 64;
constexpr std::size_t kPairBitsWordLimit = std::size_t{1} << 24;
constexpr std::size_t kTotalBitsWordLimit = std::size_t{1} << 26;
constexpr std::size_t kTile = 1024;

std::optional<unsigned long long> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) return std::nullopt;
  return v;
}

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw Error(std::string(what) + " does not fit a machine integer");
  return v.get_si();
}

// Exact count accumulator: uint64 with overflow spilled into GMP.
struct Counter {
  std::uint64_t small = 0;
  Int spill = 0;

  void add(std::uint64_t x) {
    std::uint64_t r;
    if (__builtin_add_overflow(small, x, &r)) {
      spill += Int(static_cast<unsigned long>(small));
      small = x;
    } else {
      small = r;
    }
  }
  Int value() const { return spill + Int(static_cast<unsigned long>(small)); }
};

}  // namespace

std::size_t default_max_vectors() {
  if (auto v = env_number("THETA_MAX_VECTORS")) return static_cast<std::size_t>(*v);
  return 100'000'000;
}

unsigned default_threads() {
  if (auto v = env_number("THETA_THREADS")) return static_cast<unsigned>(std::min<unsigned long long>(*v, 1024));
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t PairHistogram::at(long c) const {
  if (c < -max_ip || c > max_ip) return 0;
  return counts[static_cast<std::size_t>(c + max_ip)];
}

const std::uint64_t* PairBits::row(std::size_t v, long c) const {
  if (c < -max_ip || c > max_ip) return nullptr;
  const std::size_t width = static_cast<std::size_t>(2 * max_ip + 1);
  return data.data() + (v * width + static_cast<std::size_t>(c + max_ip)) * words;
}

struct ShortVectorIndex::Bucket {
  long norm = 0;
  std::size_t count = 0;
  std::vector<std::int16_t> coords;  // count x dim
  std::vector<std::int32_t> images;  // count x dim, rows of G v
  std::vector<std::size_t> half;     // first nonzero coordinate positive
};

struct ShortVectorIndex::Caches {
  std::mutex mutex;
  std::map<std::pair<long, long>, std::unique_ptr<PairHistogram>> histograms;
  std::map<std::pair<long, long>, std::unique_ptr<PairBits>> bits;
  std::set<std::pair<long, long>> without_bits;
  std::size_t bit_words = 0;
};

ShortVectorIndex::ShortVectorIndex() : caches_(std::make_unique<Caches>()) {}
ShortVectorIndex::ShortVectorIndex(ShortVectorIndex&&) noexcept = default;
ShortVectorIndex& ShortVectorIndex::operator=(ShortVectorIndex&&) noexcept = default;
ShortVectorIndex::~ShortVectorIndex() = default;

const ShortVectorIndex::Bucket* ShortVectorIndex::bucket(long norm) const {
  if (norm < 2 || norm % 2 != 0 || norm > bound_) return nullptr;
  return &buckets_[static_cast<std::size_t>(norm / 2 - 1)];
}

std::size_t ShortVectorIndex::bucket_size(long norm) const {
  const Bucket* b = bucket(norm);
  return b ? b->count : 0;
}

std::size_t ShortVectorIndex::total() const {
  std::size_t n = 0;
  for (const auto& b : buckets_) n += b.count;
  return n;
}

std::span<const std::int16_t> ShortVectorIndex::vector(long norm, std::size_t i) const {
  const Bucket* b = bucket(norm);
  if (b == nullptr || i >= b->count) throw std::out_of_range("short vector index out of range");
  return {b->coords.data() + i * dim_, dim_};
}

long ShortVectorIndex::inner_product(long norm_a, std::size_t i, long norm_b, std::size_t j) const {
  const Bucket* a = bucket(norm_a);
  const Bucket* b = bucket(norm_b);
  if (a == nullptr || b == nullptr || i >= a->count || j >= b->count)
    throw std::out_of_range("short vector index out of range");
  long s = 0;
  const std::int32_t* gv = a->images.data() + i * dim_;
  const std::int16_t* w = b->coords.data() + j * dim_;
  for (std::size_t k = 0; k < dim_; ++k) s += static_cast<long>(gv[k]) * w[k];
  return s;
}

namespace {

// Inner products of the chunk's v's with one tile of w's, tallied by value.
// Arithmetic is modulo 2^16: every true inner product has |c| <= cmax <
// 2^15, so the wrapped int16 result is exact. weight 2 counts (v, w) and
// (w, v) at once.
struct TileKernel {
  std::size_t dim = 0;
  long cmax = 0;
  const std::vector<std::int16_t>* soa = nullptr;
  std::size_t nw = 0;
  std::vector<std::int16_t> gv;                 // chunk x dim
  std::vector<std::vector<std::size_t>> nonzero;
  std::vector<std::int16_t> acc = std::vector<std::int16_t>(kTile);
  std::vector<std::int16_t> lanes;              // width x kTile per-lane tallies

  void load(const std::vector<std::int32_t>& images, const std::vector<std::size_t>& vs, std::size_t lo,
            std::size_t hi) {
    gv.assign((hi - lo) * dim, 0);
    nonzero.assign(hi - lo, {});
    for (std::size_t v = lo; v < hi; ++v)
      for (std::size_t k = 0; k < dim; ++k) {
        const std::int32_t x = images[vs[v] * dim + k];
        gv[(v - lo) * dim + k] = static_cast<std::int16_t>(x);
        if (x != 0) nonzero[v - lo].push_back(k);
      }
  }

  void dot(std::size_t v, std::size_t j0, std::size_t len) {
    std::int16_t* out = acc.data();
    std::fill(out, out + len, std::int16_t{0});
    for (std::size_t k : nonzero[v]) {
      const std::int16_t g = gv[v * dim + k];
      const std::int16_t* col = soa->data() + k * nw + j0;
      for (std::size_t j = 0; j < len; ++j) out[j] = static_cast<std::int16_t>(out[j] + g * col[j]);
    }
  }

  // Full tile against chunk rows [v0, v1).
  void block(std::size_t v0, std::size_t v1, std::size_t j0, std::size_t len, std::uint64_t weight,
             std::vector<std::uint64_t>& hist) {
    if (v0 >= v1) return;
    const std::size_t width = static_cast<std::size_t>(2 * cmax + 1);
    if (width > 17) {
      for (std::size_t v = v0; v < v1; ++v) {
        dot(v, j0, len);
        for (std::size_t j = 0; j < len; ++j) hist[static_cast<std::size_t>(acc[j] + cmax)] += weight;
      }
      return;
    }
    lanes.assign(width * kTile, 0);
    for (std::size_t v = v0; v < v1; ++v) {
      dot(v, j0, len);
      const std::int16_t* in = acc.data();
      for (std::size_t ci = 0; ci < width; ++ci) {
        const std::int16_t target = static_cast<std::int16_t>(static_cast<long>(ci) - cmax);
        std::int16_t* row = lanes.data() + ci * kTile;
        for (std::size_t j = 0; j < len; ++j) row[j] = static_cast<std::int16_t>(row[j] + (in[j] == target));
      }
    }
    for (std::size_t ci = 0; ci < width; ++ci) {
      std::uint64_t sum = 0;
      const std::int16_t* row = lanes.data() + ci * kTile;
      for (std::size_t j = 0; j < len; ++j) sum += static_cast<std::uint16_t>(row[j]);
      hist[ci] += weight * sum;
    }
  }
};

long isqrt_floor(long x) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

const PairHistogram& ShortVectorIndex::pair_histogram(long a, long b) const {
  if (a > b) std::swap(a, b);
  std::lock_guard lock(caches_->mutex);
  auto& slot = caches_->histograms[{a, b}];
  if (slot) return *slot;

  auto h = std::make_unique<PairHistogram>();
  const Bucket* ba = bucket(a);
  const Bucket* bb = bucket(b);
  h->max_ip = (ba && bb) ? isqrt_floor(a * b) : 0;
  const long cmax = h->max_ip;
  const std::size_t width = static_cast<std::size_t>(2 * cmax + 1);
  h->counts.assign(width, 0);
  if (ba && bb && !ba->half.empty() && !bb->half.empty()) {
    const std::size_t nw = bb->half.size();
    std::vector<std::int16_t> soa(dim_ * nw);
    for (std::size_t j = 0; j < nw; ++j)
      for (std::size_t k = 0; k < dim_; ++k) soa[k * nw + j] = bb->coords[bb->half[j] * dim_ + k];

    // For a == b only pairs i <= j of the half list are visited.
    const bool same = a == b;
    const std::size_t nv = ba->half.size();
    const std::size_t chunk = 256;  // keeps per-lane int16 tallies from overflowing
    const std::size_t tasks = (nv + chunk - 1) / chunk;
    std::mutex merge;
    std::vector<std::uint64_t> half_hist(width, 0);
    detail::parallel_for(tasks, options_.threads, [&](std::size_t t) {
      std::vector<std::uint64_t> local(width, 0);
      const std::size_t lo = t * chunk, hi = std::min(nv, lo + chunk);
      TileKernel kern;
      kern.dim = dim_;
      kern.cmax = cmax;
      kern.soa = &soa;
      kern.nw = nw;
      kern.load(ba->images, ba->half, lo, hi);
      for (std::size_t j0 = 0; j0 < nw; j0 += kTile) {
        const std::size_t len = std::min(kTile, nw - j0);
        if (!same) {
          kern.block(0, hi - lo, j0, len, 1, local);
          continue;
        }
        if (j0 >= hi) {
          kern.block(0, hi - lo, j0, len, 2, local);
          continue;
        }
        if (j0 + len <= lo) continue;
        kern.block(0, std::min(hi, j0) > lo ? std::min(hi, j0) - lo : 0, j0, len, 2, local);
        for (std::size_t i = std::max(lo, j0); i < std::min(hi, j0 + len); ++i) {
          kern.dot(i - lo, j0, len);
          for (std::size_t j = i - j0; j < len; ++j)
            local[static_cast<std::size_t>(kern.acc[j] + cmax)] += (j0 + j == i) ? 1 : 2;
        }
      }
      std::lock_guard g(merge);
      for (std::size_t i = 0; i < width; ++i) half_hist[i] += local[i];
    });
    // (+-v, +-w) covers every pair once: two sign patterns keep (v, w), two flip it.
    for (long c = -cmax; c <= cmax; ++c)
      h->counts[static_cast<std::size_t>(c + cmax)] =
          2 * (half_hist[static_cast<std::size_t>(c + cmax)] + half_hist[static_cast<std::size_t>(cmax - c)]);
  }
  slot = std::move(h);
  return *slot;
}

const PairBits* ShortVectorIndex::pair_bits(long a, long b) const {
  std::lock_guard lock(caches_->mutex);
  if (auto it = caches_->bits.find({a, b}); it != caches_->bits.end()) return it->second.get();
  if (caches_->without_bits.count({a, b})) return nullptr;

  const Bucket* ba = bucket(a);
  const Bucket* bb = bucket(b);
  const long cmax = (ba && bb) ? isqrt_floor(a * b) : 0;
  const std::size_t width = static_cast<std::size_t>(2 * cmax + 1);
  const std::size_t na = ba ? ba->count : 0, nb = bb ? bb->count : 0;
  const std::size_t words = (nb + 63) / 64;
  const double need = static_cast<double>(na) * static_cast<double>(width) * static_cast<double>(words);
  if (need > static_cast<double>(kPairBitsWordLimit) ||
      need + static_cast<double>(caches_->bit_words) > static_cast<double>(kTotalBitsWordLimit)) {
    caches_->without_bits.insert({a, b});
    return nullptr;
  }
  auto bits = std::make_unique<PairBits>();
  bits->max_ip = cmax;
  bits->words = words;
  bits->data.assign(na * width * words, 0);
  detail::parallel_for(na, options_.threads, [&](std::size_t v) {
    const std::int32_t* gv = ba->images.data() + v * dim_;
    std::uint64_t* base = bits->data.data() + v * width * words;
    for (std::size_t w = 0; w < nb; ++w) {
      const std::int16_t* x = bb->coords.data() + w * dim_;
      long s = 0;
      for (std::size_t k = 0; k < dim_; ++k) s += static_cast<long>(gv[k]) * x[k];
      base[static_cast<std::size_t>(s + cmax) * words + w / 64] |= std::uint64_t{1} << (w % 64);
    }
  });
  caches_->bit_words += bits->data.size();
  auto [it, inserted] = caches_->bits.emplace(std::pair{a, b}, std::move(bits));
  return it->second.get();
}

ShortVectorIndex short_vectors(const Lattice& lattice, long bound, const EnumOptions& options) {
  if (bound < 0 || bound % 2 != 0 || bound > 32766)
    throw std::invalid_argument("enumeration bound must be an even integer in [0, 32766], got " +
                                std::to_string(bound));
  const GramMatrix& gram = lattice.gram;
  const std::size_t n = gram.dim();
  ShortVectorIndex idx;
  idx.bound_ = bound;
  idx.dim_ = n;
  idx.gram_ = gram;
  idx.options_ = options;
  idx.buckets_.resize(static_cast<std::size_t>(bound / 2));
  for (std::size_t i = 0; i < idx.buckets_.size(); ++i) idx.buckets_[i].norm = 2 * static_cast<long>(i + 1);
  if (bound == 0 || n == 0) return idx;

  const detail::ReducedBasis red = detail::lll_reduce(gram);
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  std::vector<std::vector<long>> u(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g[i][j] = to_long(gram(i, j), "Gram entry");
      u[i][j] = to_long(red.transform(i, j), "reduction transform entry");
    }

  // q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2 summed over i is the form.
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = red.gram(i, j).get_d();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }

  std::vector<std::vector<std::int16_t>> found(idx.buckets_.size());
  std::size_t listed = 0;
  std::vector<long> y(n, 0), ub(n, 0), x(n, 0);
  std::vector<double> t(n, 0.0), c(n, 0.0);
  // Norms are even, so nothing lies strictly between bound and bound + 2.
  const double limit = static_cast<double>(bound) + 1.0;
  std::size_t i = n - 1;
  t[i] = limit;
  c[i] = 0.0;
  bool fresh = true;
  for (;;) {
    if (fresh) {
      const double z = std::sqrt(std::max(0.0, t[i] / q[i][i]));
      ub[i] = static_cast<long>(std::floor(z - c[i]));
      y[i] = static_cast<long>(std::ceil(-z - c[i])) - 1;
      fresh = false;
    }
    if (++y[i] > ub[i]) {
      if (++i == n) break;
      continue;
    }
    const double d = y[i] + c[i];
    const double rest = t[i] - q[i][i] * d * d;
    if (i > 0) {
      --i;
      t[i] = std::max(0.0, rest);
      double s = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) s += q[i][j] * static_cast<double>(y[j]);
      c[i] = s;
      fresh = true;
      continue;
    }
    if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) continue;
    for (std::size_t k = 0; k < n; ++k) {
      long s = 0;
      for (std::size_t r = 0; r < n; ++r) s += y[r] * u[r][k];
      x[k] = s;
    }
    __int128 norm = 0;
    for (std::size_t a = 0; a < n; ++a) {
      __int128 row = 0;
      for (std::size_t b = 0; b < n; ++b) row += static_cast<__int128>(g[a][b]) * x[b];
      norm += row * x[a];
    }
    if (norm <= 0 || norm > bound || norm % 2 != 0) continue;
    if (++listed > options.max_vectors)
      throw CapacityExceeded("more than " + std::to_string(options.max_vectors) +
                             " vectors of norm <= " + std::to_string(bound) + " in " + lattice.name +
                             "; raise --max-vectors or lower the bound");
    auto& out = found[static_cast<std::size_t>(norm / 2 - 1)];
    for (long v : x) {
      if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max())
        throw CapacityExceeded("short vector coordinate out of the 16-bit range in " + lattice.name);
      out.push_back(static_cast<std::int16_t>(v));
    }
  }

  for (std::size_t bi = 0; bi < found.size(); ++bi) {
    auto& bucket = idx.buckets_[bi];
    const auto& raw = found[bi];
    bucket.count = raw.size() / n;
    std::vector<std::size_t> order(bucket.count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return std::lexicographical_compare(raw.begin() + static_cast<std::ptrdiff_t>(l * n),
                                          raw.begin() + static_cast<std::ptrdiff_t>((l + 1) * n),
                                          raw.begin() + static_cast<std::ptrdiff_t>(r * n),
                                          raw.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
    });
    bucket.coords.resize(raw.size());
    bucket.images.resize(raw.size());
    for (std::size_t k = 0; k < bucket.count; ++k) {
      const std::int16_t* src = raw.data() + order[k] * n;
      std::copy(src, src + n, bucket.coords.begin() + static_cast<std::ptrdiff_t>(k * n));
      for (std::size_t a = 0; a < n; ++a) {
        long s = 0;
        for (std::size_t b = 0; b < n; ++b) s += g[a][b] * src[b];
        if (s < std::numeric_limits<std::int32_t>::min() || s > std::numeric_limits<std::int32_t>::max())
          throw CapacityExceeded("short vector image out of the 32-bit range in " + lattice.name);
        bucket.images[k * n + a] = static_cast<std::int32_t>(s);
      }
      for (std::size_t a = 0; a < n; ++a)
        if (src[a] != 0) {
          if (src[a] > 0) bucket.half.push_back(k);
          break;
        }
    }
  }
  return idx;
}

namespace {

struct Search {
  const ShortVectorIndex& idx;
  std::size_t g = 0;
  std::vector<long> norms;
  std::vector<std::vector<long>> s;
  std::vector<std::vector<const PairBits*>> bits;  // bits[j][i], j < i
  bool use_bits = false;

  std::uint64_t run(std::size_t v_begin, std::size_t v_end) const {
    std::vector<std::size_t> chosen(g);
    if (use_bits) {
      std::vector<std::vector<std::uint64_t>> buf(g);
      for (std::size_t i = 1; i < g; ++i) buf[i].resize((idx.bucket_size(norms[i]) + 63) / 64);
      std::uint64_t total = 0;
      for (std::size_t v = v_begin; v < v_end; ++v) {
        chosen[0] = v;
        total += with_bits(1, chosen, buf);
      }
      return total;
    }
    std::uint64_t total = 0;
    for (std::size_t v = v_begin; v < v_end; ++v) {
      chosen[0] = v;
      total += scan(1, chosen);
    }
    return total;
  }

  std::uint64_t with_bits(std::size_t level, std::vector<std::size_t>& chosen,
                          std::vector<std::vector<std::uint64_t>>& buf) const {
    auto& mask = buf[level];
    for (std::size_t j = 0; j < level; ++j) {
      const std::uint64_t* row = bits[j][level]->row(chosen[j], s[j][level]);
      if (row == nullptr) return 0;
      if (j == 0)
        std::copy(row, row + mask.size(), mask.begin());
      else
        for (std::size_t w = 0; w < mask.size(); ++w) mask[w] &= row[w];
    }
    if (level + 1 == g) {
      std::uint64_t n = 0;
      for (std::uint64_t w : mask) n += static_cast<std::uint64_t>(std::popcount(w));
      return n;
    }
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < mask.size(); ++w) {
      std::uint64_t word = mask[w];
      while (word != 0) {
        chosen[level] = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        total += with_bits(level + 1, chosen, buf);
      }
    }
    return total;
  }

  std::uint64_t scan(std::size_t level, std::vector<std::size_t>& chosen) const {
    const std::size_t n = idx.bucket_size(norms[level]);
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < n; ++w) {
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j)
        ok = idx.inner_product(norms[j], chosen[j], norms[level], w) == s[j][level];
      if (!ok) continue;
      if (level + 1 == g) {
        ++total;
      } else {
        chosen[level] = w;
        total += scan(level + 1, chosen);
      }
    }
    return total;
  }
};

}  // namespace

Int count_representations(const Lattice& lattice, const GramMatrix& s, const ShortVectorIndex& index,
                          unsigned threads) {
  if (lattice.gram != index.gram())
    throw std::invalid_argument("short vector index was built for a different lattice");
  const std::size_t g = s.dim();
  for (std::size_t i = 0; i < g; ++i)
    if (s(i, i) > index.bound())
      throw BoundTooSmall("diagonal entry " + s(i, i).get_str() + " exceeds the enumeration bound " +
                          std::to_string(index.bound()));
  if (g == 0) return 1;
  for (std::size_t i = 0; i < g; ++i)
    if (s(i, i) < 0 || mpz_odd_p(s(i, i).get_mpz_t())) return 0;
  if (!is_positive_semidefinite(s)) return 0;

  // Zero diagonal forces the zero vector, which pairs to 0 with everything.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < g; ++i) {
    if (s(i, i) != 0) {
      live.push_back(i);
      continue;
    }
    for (std::size_t j = 0; j < g; ++j)
      if (s(i, j) != 0) return 0;
  }
  const std::size_t k = live.size();
  if (k == 0) return 1;
  std::stable_sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
    return index.bucket_size(s(a, a).get_si()) < index.bucket_size(s(b, b).get_si());
  });

  Search search{index, k, {}, std::vector<std::vector<long>>(k, std::vector<long>(k)), {}, false};
  for (std::size_t a = 0; a < k; ++a) {
    search.norms.push_back(s(live[a], live[a]).get_si());
    for (std::size_t b = 0; b < k; ++b) search.s[a][b] = to_long(s(live[a], live[b]), "index entry");
  }
  if (k == 1) return Int(static_cast<unsigned long>(index.bucket_size(search.norms[0])));
  if (k == 2)
    return Int(static_cast<unsigned long>(
        index.pair_histogram(search.norms[0], search.norms[1]).at(search.s[0][1])));

  search.bits.assign(k, std::vector<const PairBits*>(k, nullptr));
  search.use_bits = true;
  for (std::size_t i = 1; i < k && search.use_bits; ++i)
    for (std::size_t j = 0; j < i && search.use_bits; ++j) {
      search.bits[j][i] = index.pair_bits(search.norms[j], search.norms[i]);
      search.use_bits = search.bits[j][i] != nullptr;
    }

  const std::size_t first = index.bucket_size(search.norms[0]);
  std::vector<std::uint64_t> shard_totals(kShards, 0);
  detail::parallel_for(kShards, threads == 0 ? index.options().threads : threads, [&](std::size_t shard) {
    const std::size_t lo = first * shard / kShards, hi = first * (shard + 1) / kShards;
    shard_totals[shard] = search.run(lo, hi);
  });
  Counter total;
  for (std::uint64_t t : shard_totals) total.add(t);
  return total.value();
}

std::map<long, std::size_t> count_by_norm(const Lattice& lattice, long bound, const EnumOptions& options) {
  const ShortVectorIndex idx = short_vectors(lattice, bound, options);
  std::map<long, std::size_t> out;
  for (long norm = 2; norm <= bound; norm += 2) out[norm] = idx.bucket_size(norm);
  return out;
}

void annotate(Lattice& lattice, const EnumOptions& options) {
  if (lattice.rank() == 0) return;
  for (long bound = 2;; bound += 2) {
    const ShortVectorIndex idx = short_vectors(lattice, bound, options);
    if (const std::size_t n = idx.bucket_size(bound); n > 0) {
      lattice.min_norm = bound;
      lattice.kissing_number = static_cast<long>(n);
      return;
    }
  }
}

}  // namespace unimod
