#include "unimod/quadform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "unimod/errors.hpp"

namespace unimod {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& row : rows) {
    v.emplace_back();
    for (long x : row) v.back().emplace_back(x);
  }
  return from_rows(v);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

// ---------------------------------------------------------------------------
// GramMatrix

GramMatrix GramMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  GramMatrix g;
  g.dim_ = rows.size();
  g.data_.resize(g.dim_ * g.dim_);
  for (std::size_t i = 0; i < g.dim_; ++i) {
    if (rows[i].size() != g.dim_) throw NotSymmetric("Gram matrix is not square");
    for (std::size_t j = 0; j < g.dim_; ++j) g.data_[i * g.dim_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < g.dim_; ++i)
    for (std::size_t j = i + 1; j < g.dim_; ++j)
      if (g(i, j) != g(j, i))
        throw NotSymmetric("Gram matrix is not symmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
  return g;
}

GramMatrix GramMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& row : rows) {
    v.emplace_back();
    for (long x : row) v.back().emplace_back(x);
  }
  return from_rows(v);
}

GramMatrix GramMatrix::from_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NotSymmetric("Gram matrix is not square");
  std::vector<std::vector<Int>> v(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i][j] = m(i, j);
  return from_rows(v);
}

GramMatrix GramMatrix::zero(std::size_t dim) {
  GramMatrix g;
  g.dim_ = dim;
  g.data_.resize(dim * dim);
  return g;
}

bool GramMatrix::is_even() const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (mpz_odd_p((*this)(i, i).get_mpz_t())) return false;
  return true;
}

IntMatrix GramMatrix::as_matrix() const {
  IntMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

GramMatrix GramMatrix::transformed(const IntMatrix& u) const {
  if (u.cols() != dim_) throw std::invalid_argument("basis change has wrong width");
  return from_matrix(u * as_matrix() * u.transposed());
}

GramMatrix GramMatrix::principal(const std::vector<std::size_t>& indices) const {
  GramMatrix g = zero(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      g.data_[i * g.dim_ + j] = (*this)(indices[i], indices[j]);
  return g;
}

std::string GramMatrix::serialize() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out += ',';
      out += (*this)(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

GramMatrix GramMatrix::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&] { return std::invalid_argument("malformed Gram matrix: " + text); };
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail();
  std::vector<std::vector<Int>> rows;
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    if (s[pos] == ',') ++pos;
    if (s[pos] != '[') throw fail();
    const std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw fail();
    rows.emplace_back();
    std::stringstream row(s.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(row, item, ',')) {
      Int v;
      if (v.set_str(item, 10) != 0) throw fail();
      rows.back().push_back(v);
    }
    pos = close + 1;
  }
  return from_rows(rows);
}

bool GramMatrix::operator==(const GramMatrix& rhs) const {
  return dim_ == rhs.dim_ && data_ == rhs.data_;
}

std::strong_ordering GramMatrix::operator<=>(const GramMatrix& rhs) const {
  if (dim_ != rhs.dim_) return dim_ <=> rhs.dim_;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const int c = cmp(data_[k], rhs.data_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Elimination

std::vector<std::vector<Rational>> RationalCholesky::reconstruct() const {
  const std::size_t n = diag.size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k <= std::min(i, j); ++k)
        out[i][j] += lower[i][k] * diag[k] * lower[j][k];
  return out;
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t exact_rank(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

RationalCholesky rational_cholesky(const GramMatrix& g) {
  const std::size_t n = g.dim();
  RationalCholesky out;
  out.diag.resize(n);
  out.lower.assign(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = g(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= out.lower[j][k] * out.lower[j][k] * out.diag[k];
    if (sgn(d) <= 0) throw NotPositiveDefinite(j);
    out.diag[j] = d;
    out.lower[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= out.lower[i][k] * out.lower[j][k] * out.diag[k];
      out.lower[i][j] = s / d;
    }
  }
  return out;
}

bool is_positive_definite(const GramMatrix& g) {
  try {
    rational_cholesky(g);
    return true;
  } catch (const NotPositiveDefinite&) {
    return false;
  }
}

bool is_positive_semidefinite(const GramMatrix& g) {
  // Symmetric pivoting on positive diagonal entries. A zero diagonal entry
  // forces its whole row to vanish in a PSD matrix.
  std::vector<std::vector<Rational>> a(g.dim(), std::vector<Rational>(g.dim()));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) a[i][j] = g(i, j);

  std::vector<std::size_t> live(g.dim());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  while (!live.empty()) {
    std::vector<std::size_t> next;
    std::size_t pivot = live.size();
    for (std::size_t idx = 0; idx < live.size(); ++idx) {
      const std::size_t i = live[idx];
      const int s = sgn(a[i][i]);
      if (s < 0) return false;
      if (s == 0) {
        for (std::size_t j : live)
          if (sgn(a[i][j]) != 0) return false;
        continue;
      }
      next.push_back(i);
      if (pivot == live.size()) pivot = i;
    }
    if (next.empty()) return true;
    const Rational p = a[pivot][pivot];
    live.clear();
    for (std::size_t i : next)
      if (i != pivot) live.push_back(i);
    for (std::size_t i : live) {
      const Rational f = a[i][pivot] / p;
      for (std::size_t j : live) a[i][j] -= f * a[pivot][j];
    }
  }
  return true;
}

bool is_even_unimodular(const GramMatrix& g) {
  return g.is_even() && determinant(g.as_matrix()) == 1 && is_positive_definite(g);
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
  std::vector<std::vector<Int>> a(generators.rows(), std::vector<Int>(generators.cols()));
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) a[i][j] = generators(i, j);

  const std::size_t rows = a.size(), cols = generators.cols();
  auto axpy = [cols](std::vector<Int>& dst, const Int& q, const std::vector<Int>& src) {
    for (std::size_t j = 0; j < cols; ++j) dst[j] -= q * src[j];
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c over rows r..end.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0)) best = i;
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        axpy(a[i], q, a[r]);
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0) axpy(a[i], q, a[r]);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a[i][j];
  return out;
}

}  // namespace unimod
