#include "solfour/classify/invariant.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>

namespace solfour::classify {

IntMatrix PillowcaseInvariant::matrix() const {
  IntMatrix m(2, 2);
  m(0, 0) = p;
  m(0, 1) = q;
  m(1, 0) = r;
  m(1, 1) = p;
  return m;
}

IntMatrix PillowcaseInvariant::inverse_matrix() const {
  IntMatrix m(2, 2);
  m(0, 0) = p;
  m(0, 1) = -q;
  m(1, 0) = -r;
  m(1, 1) = p;
  return m;
}

bool enumeration_less(const PillowcaseInvariant& a, const PillowcaseInvariant& b) {
  const Int aa = abs(a.p), ab = abs(b.p);
  if (aa != ab) return aa < ab;
  if (sgn(a.p) != sgn(b.p)) return sgn(a.p) < sgn(b.p);
  return a.q < b.q;
}

std::string_view to_string(Defect d) {
  switch (d) {
    case Defect::NotTwoByTwo: return "not a 2x2 matrix";
    case Defect::UnequalDiagonal: return "diagonal entries differ";
    case Defect::EvenP: return "diagonal entry p is even";
    case Defect::SmallP: return "|p| <= 1";
    case Defect::OddOffDiagonal: return "off-diagonal entry q or r is odd";
    case Defect::DetNotOne: return "determinant is not 1";
    case Defect::NonPositiveQ: return "q <= 0";
  }
  return "?";
}

std::optional<Defect> find_defect(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) return Defect::NotTwoByTwo;
  const Int& p = m(0, 0);
  if (p != m(1, 1)) return Defect::UnequalDiagonal;
  if (mpz_even_p(p.get_mpz_t())) return Defect::EvenP;
  if (abs(p) <= 1) return Defect::SmallP;
  if (mpz_odd_p(m(0, 1).get_mpz_t()) || mpz_odd_p(m(1, 0).get_mpz_t())) return Defect::OddOffDiagonal;
  if (determinant(m) != 1) return Defect::DetNotOne;
  if (m(0, 1) <= 0) return Defect::NonPositiveQ;
  return std::nullopt;
}

PillowcaseInvariant validate(const IntMatrix& m) {
  if (auto d = find_defect(m)) throw InvariantError(*d, "invalid invariant: " + std::string(to_string(*d)));
  return {m(0, 0), m(0, 1), m(1, 0)};
}

PillowcaseInvariant normalize(const IntMatrix& m) {
  const auto d = find_defect(m);
  if (!d) return {m(0, 0), m(0, 1), m(1, 0)};
  if (*d != Defect::NonPositiveQ) throw InvariantError(*d, "cannot normalize: " + std::string(to_string(*d)));
  // Inverse of [[p, q], [r, p]] is [[p, -q], [-r, p]]; q = 0 is impossible once det = 1 and |p| > 1.
  return {m(0, 0), -m(0, 1), -m(1, 0)};
}

PillowcaseInvariant normalize(const PillowcaseInvariant& psi) { return normalize(psi.matrix()); }

bool isomorphic(const PillowcaseInvariant& a, const PillowcaseInvariant& b) { return normalize(a) == normalize(b); }

namespace {

struct Small {
  std::int64_t q;
  std::int64_t r;
};

// Positive even factorizations p^2 - 1 = q r with q, r <= max_entry.
std::vector<Small> factorizations(std::int64_t p, std::int64_t max_entry) {
  const std::int64_t n = p * p - 1;
  std::vector<Small> out;
  for (std::int64_t q = 2; q <= max_entry; q += 2) {
    if (n % q) continue;
    const std::int64_t r = n / q;
    if (r % 2 == 0 && r <= max_entry) out.push_back({q, r});
  }
  return out;
}

void check_max_entry(long max_entry) {
  if (max_entry > kMaxEnumerationEntry)
    throw BoundError("enumerate: max_entry above " + std::to_string(kMaxEnumerationEntry));
}

void emit(std::vector<PillowcaseInvariant>& out, std::int64_t p, const std::vector<Small>& fs) {
  for (long sign : {-1L, 1L})
    for (const auto& f : fs) out.push_back({Int(sign * static_cast<long>(p)), Int(static_cast<long>(f.q)), Int(static_cast<long>(f.r))});
}

}  // namespace

std::vector<PillowcaseInvariant> enumerate(long max_entry) {
  check_max_entry(max_entry);
  std::vector<PillowcaseInvariant> out;
  if (max_entry < 3) return out;
  const std::int64_t count = (max_entry - 1) / 2;  // p = 3, 5, ..., <= max_entry
  std::vector<std::vector<Small>> per_p(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) per_p[static_cast<std::size_t>(i)] = factorizations(3 + 2 * i, max_entry);
  for (std::int64_t i = 0; i < count; ++i) emit(out, 3 + 2 * i, per_p[static_cast<std::size_t>(i)]);
  return out;
}

namespace serial {

std::vector<PillowcaseInvariant> enumerate(long max_entry) {
  check_max_entry(max_entry);
  std::vector<PillowcaseInvariant> out;
  for (std::int64_t p = 3; p <= max_entry; p += 2) emit(out, p, factorizations(p, max_entry));
  return out;
}

}  // namespace serial

}  // namespace solfour::classify
