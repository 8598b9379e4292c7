#pragma once

// Short-vector enumeration and representation counting
//
//   r_L(S) = #{ (v_1, ..., v_g) in L^g : (v_i, v_j) = S_ij },
//
// the Fourier coefficient of the (unnormalized) degree-g theta series of L at
// the even matrix S. Enumeration proposes coordinates with a floating-point
// Fincke-Pohst search on an LLL-reduced basis; every emitted vector is then
// re-checked with exact integer arithmetic against the lattice's own Gram
// matrix. All counts are exact.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "unimod/lattice.hpp"
#include "unimod/quadform.hpp"

namespace unimod {

// THETA_MAX_VECTORS overrides the default capacity of 10^8 vectors.
std::size_t default_max_vectors();
// THETA_THREADS overrides the default of one thread per hardware core.
unsigned default_threads();

struct EnumOptions {
  std::size_t max_vectors = default_max_vectors();
  unsigned threads = default_threads();
};

// Aggregated inner products between two norm buckets:
// counts[c + max_ip] = #{ (v, w) : |v|^2 = a, |w|^2 = b, (v, w) = c }.
struct PairHistogram {
  long max_ip = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(long c) const;
};

// For every vector v of bucket a and every inner product c, the set of
// vectors w of bucket b with (v, w) = c, as a bitset over bucket b.
struct PairBits {
  long max_ip = 0;
  std::size_t words = 0;  // 64-bit words per bitset
  std::vector<std::uint64_t> data;

  // nullptr when |c| > max_ip.
  const std::uint64_t* row(std::size_t v, long c) const;
};

class ShortVectorIndex {
 public:
  ShortVectorIndex(ShortVectorIndex&&) noexcept;
  ShortVectorIndex& operator=(ShortVectorIndex&&) noexcept;
  ~ShortVectorIndex();

  long bound() const noexcept { return bound_; }
  std::size_t dim() const noexcept { return dim_; }
  const GramMatrix& gram() const noexcept { return gram_; }
  const EnumOptions& options() const noexcept { return options_; }

  // Number of vectors of the given norm (0 for odd norms or norms > bound).
  std::size_t bucket_size(long norm) const;
  // Nonzero vectors listed, all norms.
  std::size_t total() const;

  // Coordinates (in the lattice's Gram basis) of the i-th vector of a
  // bucket; buckets are sorted lexicographically.
  std::span<const std::int16_t> vector(long norm, std::size_t i) const;
  long inner_product(long norm_a, std::size_t i, long norm_b, std::size_t j) const;

  // Built on first use and cached; thread-safe.
  const PairHistogram& pair_histogram(long a, long b) const;
  // nullptr when the bitsets would exceed the memory budget.
  const PairBits* pair_bits(long a, long b) const;

 private:
  friend ShortVectorIndex short_vectors(const Lattice&, long, const EnumOptions&);
  struct Bucket;
  struct Caches;

  ShortVectorIndex();
  const Bucket* bucket(long norm) const;

  long bound_ = 0;
  std::size_t dim_ = 0;
  GramMatrix gram_;
  EnumOptions options_;
  std::vector<Bucket> buckets_;  // index (norm / 2) - 1
  std::unique_ptr<Caches> caches_;
};

// All v in L with 0 < v^T G v <= bound (bound even, >= 0). Throws
// CapacityExceeded when more than options.max_vectors would be listed.
ShortVectorIndex short_vectors(const Lattice& lattice, long bound, const EnumOptions& options = {});

// Exact r_L(S). Throws BoundTooSmall when a diagonal entry of S exceeds the
// index bound. threads = 0 uses the index's configured thread count; the
// shard partition does not depend on it.
Int count_representations(const Lattice& lattice, const GramMatrix& s, const ShortVectorIndex& index,
                          unsigned threads = 0);

// Number of vectors of each even norm 2, 4, ..., bound.
std::map<long, std::size_t> count_by_norm(const Lattice& lattice, long bound,
                                          const EnumOptions& options = {});

// Fills lattice.min_norm and lattice.kissing_number.
void annotate(Lattice& lattice, const EnumOptions& options = {});

}  // namespace unimod
