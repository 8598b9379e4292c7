#include "reduce.hpp"

#include <utility>
#include <vector>

#include "unimod/errors.hpp"

namespace unimod::detail {

namespace {

// Cohen, "A Course in Computational Algebraic Number Theory", Alg. 2.6.7,
// with the basis vectors only ever seen through their Gram matrix. Indices
// are 1-based to match the d_0 = 1 convention.
class IntegralLll {
 public:
  explicit IntegralLll(const GramMatrix& g)
      : n_(g.dim()), gram_(n_ + 1, std::vector<Int>(n_ + 1)), u_(IntMatrix::identity(n_)),
        d_(n_ + 1), lambda_(n_ + 1, std::vector<Int>(n_ + 1)) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) gram_[i + 1][j + 1] = g(i, j);
  }

  ReducedBasis run() {
    if (n_ == 0) return {GramMatrix{}, IntMatrix{}};
    d_[0] = 1;
    d_[1] = gram_[1][1];
    if (d_[1] <= 0) throw NotPositiveDefinite(0);
    std::size_t k = 2, kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (std::size_t j = 1; j <= k; ++j) {
          Int u = gram_[k][j];
          for (std::size_t i = 1; i < j; ++i) {
            u = d_[i] * u - lambda_[k][i] * lambda_[j][i];
            mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
          }
          if (j < k) {
            lambda_[k][j] = u;
          } else {
            if (u <= 0) throw NotPositiveDefinite(k - 1);
            d_[k] = u;
          }
        }
      }
      for (;;) {
        reduce(k, k - 1);
        const Int lhs = 4 * d_[k] * d_[k - 2];
        const Int rhs = 3 * d_[k - 1] * d_[k - 1] - 4 * lambda_[k][k - 1] * lambda_[k][k - 1];
        if (lhs < rhs) {
          swap(k, kmax);
          if (k > 2) --k;
          continue;
        }
        break;
      }
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }

    std::vector<std::vector<Int>> rows(n_, std::vector<Int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) rows[i][j] = gram_[i + 1][j + 1];
    return {GramMatrix::from_rows(rows), u_};
  }

 private:
  // b_k <- b_k - q b_l with q the nearest integer to lambda_kl / d_l.
  void reduce(std::size_t k, std::size_t l) {
    Int twice = 2 * lambda_[k][l];
    if (mpz_cmpabs(twice.get_mpz_t(), d_[l].get_mpz_t()) <= 0) return;
    // q = floor((2 lambda + d) / (2 d))
    Int q;
    Int num = twice + d_[l];
    Int den = 2 * d_[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (q == 0) return;
    for (std::size_t j = 1; j <= n_; ++j) gram_[k][j] -= q * gram_[l][j];
    for (std::size_t i = 1; i <= n_; ++i) gram_[i][k] -= q * gram_[i][l];
    for (std::size_t j = 0; j < n_; ++j) u_(k - 1, j) -= q * u_(l - 1, j);
    lambda_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(gram_[k], gram_[k - 1]);
    for (auto& row : gram_) std::swap(row[k], row[k - 1]);
    for (std::size_t j = 0; j < n_; ++j) std::swap(u_(k - 1, j), u_(k - 2, j));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Int lam = lambda_[k][k - 1];
    Int b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Int t = lambda_[i][k];
      Int a = d_[k] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d_[k - 1].get_mpz_t());
      lambda_[i][k] = a;
      Int c = b * t + lam * lambda_[i][k];
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d_[k].get_mpz_t());
      lambda_[i][k - 1] = c;
    }
    d_[k - 1] = b;
  }

  std::size_t n_;
  std::vector<std::vector<Int>> gram_;
  IntMatrix u_;
  std::vector<Int> d_;
  std::vector<std::vector<Int>> lambda_;
};

}  // namespace

ReducedBasis lll_reduce(const GramMatrix& gram) { return IntegralLll(gram).run(); }

}  // namespace unimod::detail
