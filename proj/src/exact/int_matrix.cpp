#include "solfour/exact/int_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

namespace solfour {

IntVector::IntVector(std::initializer_list<long> xs) {
  v_.reserve(xs.size());
  for (long x : xs) v_.emplace_back(x);
}

bool IntVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Int& x) { return x == 0; });
}

Int IntVector::max_abs() const {
  Int m = 0;
  for (const auto& x : v_) m = std::max<Int>(m, abs(x));
  return m;
}

IntVector& IntVector::operator+=(const IntVector& o) {
  if (o.size() != size()) throw DimensionError("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) v_[i] += o.v_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& o) {
  if (o.size() != size()) throw DimensionError("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }

IntVector operator-(IntVector a) {
  for (auto& x : a) x = -x;
  return a;
}

IntVector operator*(const Int& k, IntVector a) {
  for (auto& x : a) x *= k;
  return a;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<long>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t n) {
  IntMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw DimensionError("column has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t n) {
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw DimensionError("row has wrong dimension");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

std::size_t IntMatrix::dim() const {
  if (!is_square()) throw DimensionError("square matrix required");
  return rows_;
}

IntVector IntMatrix::row(std::size_t i) const {
  IntVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("submatrix out of range");
  IntMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::max_abs() const {
  Int m = 0;
  for (const auto& x : a_) m = std::max<Int>(m, abs(x));
  return m;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.a_ < b.a_;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) { return Int(-1) * a; }

IntMatrix operator*(const Int& k, const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k * a(i, j);
  return c;
}

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Int trace(const IntMatrix& m) {
  Int t = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

bool is_unimodular(const IntMatrix& m) { return m.is_square() && abs(determinant(m)) == 1; }

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.dim();
  const Int det = determinant(m);
  if (abs(det) != 1) throw std::domain_error("matrix is not invertible over the integers");
  // Gauss-Jordan over Z: every pivot ends up a unit because |det| = 1.
  IntMatrix a = m;
  IntMatrix inv = IntMatrix::identity(n);
  auto row_axpy = [n](IntMatrix& x, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < n; ++j) x(dst, j) += c * x(src, j);
  };
  auto row_swap = [n](IntMatrix& x, std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < n; ++j) std::swap(x(r, j), x(s, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t piv = n;
      for (std::size_t i = k; i < n; ++i)
        if (a(i, k) != 0 && (piv == n || abs(a(i, k)) < abs(a(piv, k)))) piv = i;
      if (piv != k) {
        row_swap(a, k, piv);
        row_swap(inv, k, piv);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
        row_axpy(a, i, k, -q);
        row_axpy(inv, i, k, -q);
        if (a(i, k) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(k, k) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        a(k, j) = -a(k, j);
        inv(k, j) = -inv(k, j);
      }
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      if (a(i, k) == 0) continue;
      Int c = -a(i, k);
      row_axpy(a, i, k, c);
      row_axpy(inv, i, k, c);
    }
  }
  return inv;
}

IntMatrix mat_pow(const IntMatrix& m, long k) {
  const std::size_t n = m.dim();
  IntMatrix base = k < 0 ? inverse_unimodular(m) : m;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL : static_cast<unsigned long>(k);
  IntMatrix result = IntMatrix::identity(n);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntMatrix reduce_mod(const IntMatrix& m, long modulus) {
  IntMatrix r(m.rows(), m.cols());
  const Int md = modulus;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_fdiv_r(r(i, j).get_mpz_t(), m(i, j).get_mpz_t(), md.get_mpz_t());
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw ParseError("empty integer entry");
  std::size_t start = s.front() == '-' ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed integer '" + std::string(s) + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("malformed integer '" + std::string(s) + "'");
  return Int(std::string(s), 10);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && (text.front() == '(' || text.front() == '[') && (text.back() == ')' || text.back() == ']'))
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw ParseError("empty matrix literal");
  std::vector<std::vector<Int>> rows;
  for (auto r : split(text, ';')) {
    std::vector<Int> row;
    for (auto e : split(r, ',')) row.push_back(parse_integer(e));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("ragged matrix literal '" + std::string(text) + "'");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
  }
  return os.str();
}

IntVector parse_vector(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && (text.front() == '(' || text.front() == '[') && (text.back() == ')' || text.back() == ']'))
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) throw ParseError("empty vector literal");
  std::vector<Int> xs;
  for (auto e : split(text, ',')) xs.push_back(parse_integer(e));
  return IntVector(std::move(xs));
}

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool fits_long(const Int& x) { return x.fits_slong_p(); }

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw BoundError("integer " + x.get_str() + " exceeds machine range");
  return x.get_si();
}

}  // namespace solfour
