#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace solfour {

using Int = mpz_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown for malformed textual input (matrix literals, words, catalog ids).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a request exceeds a supported search or arithmetic bound.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Column vector of exact integers.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : v_(n) {}
  IntVector(std::initializer_list<long> xs);
  explicit IntVector(std::vector<Int> xs) : v_(std::move(xs)) {}

  [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
  Int& operator[](std::size_t i) { return v_[i]; }
  const Int& operator[](std::size_t i) const { return v_[i]; }

  auto begin() noexcept { return v_.begin(); }
  auto end() noexcept { return v_.end(); }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Int max_abs() const;

  IntVector& operator+=(const IntVector& o);
  IntVector& operator-=(const IntVector& o);

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.v_ == b.v_; }
  friend bool operator<(const IntVector& a, const IntVector& b) { return a.v_ < b.v_; }

 private:
  std::vector<Int> v_;
};

IntVector operator+(IntVector a, const IntVector& b);
IntVector operator-(IntVector a, const IntVector& b);
IntVector operator-(IntVector a);
IntVector operator*(const Int& k, IntVector a);
Int dot(const IntVector& a, const IntVector& b);

/// Dense row-major matrix of exact integers.  Most of the toolkit works with
/// square 2x2 and 3x3 matrices; rectangular shapes appear as relator
/// matrices and lattice bases.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t n) { return IntMatrix(n, n); }
  static IntMatrix diagonal(const std::vector<long>& d);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t n);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] std::size_t dim() const;  // throws unless square

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] IntVector row(std::size_t i) const;
  [[nodiscard]] IntVector column(std::size_t j) const;
  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Int max_abs() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Int& k, const IntMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);
Int trace(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);  // |det| == 1

/// Inverse of a matrix with |det| = 1.  Throws std::domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// M^k; negative k requires |det M| = 1.
IntMatrix mat_pow(const IntMatrix& m, long k);

/// Entrywise reduction into [0, modulus).
IntMatrix reduce_mod(const IntMatrix& m, long modulus);

/// Matrix literal "a,b;c,d": rows separated by ';', entries by ','.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);
/// Vector literal "a,b,c" (parentheses optional).
IntVector parse_vector(std::string_view text);
std::string format_vector(const IntVector& v);

bool fits_long(const Int& x);
long to_long(const Int& x);  // throws BoundError when out of range

}  // namespace solfour
