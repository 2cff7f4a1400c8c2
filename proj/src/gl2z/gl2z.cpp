#include "solfour/gl2z/gl2z.hpp"

#include <set>
#include <stdexcept>

#include "solfour/gl2z/kernels.hpp"

namespace solfour::gl2z {

namespace {

const IntMatrix kIdentity = IntMatrix::identity(2);
const IntMatrix kMinusIdentity = -IntMatrix::identity(2);

void require_gl2z(const IntMatrix& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument(std::string(what) + ": 2x2 matrix required");
  if (abs(determinant(m)) != 1) throw std::invalid_argument(std::string(what) + ": |det| must be 1");
}

}  // namespace

std::optional<int> element_order(const IntMatrix& m) {
  require_gl2z(m, "element_order");
  IntMatrix p = m;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

std::string_view to_string(FiniteClass c) {
  switch (c) {
    case FiniteClass::Identity: return "Identity";
    case FiniteClass::MinusIdentity: return "MinusIdentity";
    case FiniteClass::Reflection: return "Reflection";
    case FiniteClass::Swap: return "Swap";
    case FiniteClass::Order3: return "Order3";
    case FiniteClass::Order4: return "Order4";
    case FiniteClass::Order6: return "Order6";
  }
  return "?";
}

IntMatrix representative(FiniteClass c) {
  switch (c) {
    case FiniteClass::Identity: return kIdentity;
    case FiniteClass::MinusIdentity: return kMinusIdentity;
    case FiniteClass::Reflection: return {{1, 0}, {0, -1}};
    case FiniteClass::Swap: return {{0, 1}, {1, 0}};
    case FiniteClass::Order3: return {{0, 1}, {-1, -1}};
    case FiniteClass::Order4: return {{0, 1}, {-1, 0}};
    case FiniteClass::Order6: return {{0, 1}, {-1, 1}};
  }
  throw std::logic_error("unknown finite class");
}

FiniteOrderClass finite_order_class(const IntMatrix& m) {
  const auto order = element_order(m);
  if (!order) throw std::invalid_argument("finite_order_class: element has infinite order");
  FiniteClass tag;
  switch (*order) {
    case 1: tag = FiniteClass::Identity; break;
    case 2:
      if (m == kMinusIdentity)
        tag = FiniteClass::MinusIdentity;
      else
        tag = reduce_mod(m, 2).is_identity() ? FiniteClass::Reflection : FiniteClass::Swap;
      break;
    case 3: tag = FiniteClass::Order3; break;
    case 4: tag = FiniteClass::Order4; break;
    case 6: tag = FiniteClass::Order6; break;
    default: throw std::logic_error("finite order outside {1,2,3,4,6}");
  }
  return {tag, representative(tag)};
}

std::optional<IntMatrix> conjugate_in_gl2z(const IntMatrix& m, const IntMatrix& n, int bound) {
  require_gl2z(m, "conjugate_in_gl2z");
  require_gl2z(n, "conjugate_in_gl2z");
  if (m == n && bound >= 1) return kIdentity;
  const auto sm = kernels::to_small(m);
  const auto sn = kernels::to_small(n);
  if (!sm || !sn) return kernels::serial::first_conjugator(m, n, bound);
  const auto box = kernels::unimodular_box(bound);
  const auto idx = kernels::parallel::first_conjugator(box, *sm, *sn);
  if (!idx) return std::nullopt;
  return kernels::to_int_matrix(box[*idx]);
}

std::vector<IntMatrix> centralizer_sample(const IntMatrix& m, int bound) {
  require_gl2z(m, "centralizer_sample");
  const auto sm = kernels::to_small(m);
  if (!sm) return kernels::serial::centralizer(m, bound);
  const auto box = kernels::unimodular_box(bound);
  std::vector<IntMatrix> out;
  for (std::size_t i : kernels::parallel::centralizer(box, *sm)) out.push_back(kernels::to_int_matrix(box[i]));
  return out;
}

TwoEndedType two_ended_type(std::span<const IntMatrix> generators) {
  bool adjoined = false;
  std::vector<IntMatrix> rest;
  for (const auto& g : generators) {
    require_gl2z(g, "two_ended_type");
    if (g == kMinusIdentity)
      adjoined = true;
    else
      rest.push_back(g);
  }

  TwoEndedType out;
  if (rest.size() == 1) {
    if (element_order(rest[0])) throw NotTwoEnded("single generator has finite order");
    out.case_number = adjoined ? 2 : 1;
    out.witnesses = rest;
    out.has_minus_identity = adjoined;
    return out;
  }
  if (rest.size() != 2) throw std::invalid_argument("two_ended_type: expected one or two generators besides -I");

  IntMatrix a = rest[0];
  IntMatrix b = rest[1];
  const auto oa = element_order(a);
  const auto ob = element_order(b);
  if (!oa || !ob) throw NotTwoEnded("two-generator typing needs finite-order generators");
  if (element_order(a * b)) throw NotTwoEnded("product of the generators has finite order");
  if ((*oa != 2 && *oa != 4) || (*ob != 2 && *ob != 4))
    throw NotTwoEnded("generator orders must divide 4 in a two-ended subgroup");

  if (*oa == 2 && *ob == 4) std::swap(a, b);
  out.witnesses = {a, b};
  if (*oa == 4 || *ob == 4) {
    // An order-4 element squares to -I.
    out.case_number = (*oa == 4 && *ob == 4) ? 6 : 5;
    out.has_minus_identity = true;
    return out;
  }

  bool witnessed = false;
  const IntMatrix ab = a * b;
  const IntMatrix ab_inv = inverse_unimodular(ab);
  IntMatrix up = IntMatrix::identity(2), down = IntMatrix::identity(2);
  for (int k = 1; k <= 12 && !witnessed; ++k) {
    up = up * ab;
    down = down * ab_inv;
    witnessed = up == kMinusIdentity || down == kMinusIdentity;
  }
  witnessed = witnessed || a * a == kMinusIdentity || b * b == kMinusIdentity;
  out.has_minus_identity = adjoined || witnessed;
  out.minus_identity_certain = out.has_minus_identity;
  out.case_number = out.has_minus_identity ? 4 : 3;
  return out;
}

std::string_view to_string(MonodromyImage m) {
  return m == MonodromyImage::DihedralInfinite ? "DihedralInfinite" : "Other";
}

MonodromyImage monodromy_image_type(std::span<const IntMatrix> images) {
  std::vector<IntMatrix> gens;
  for (const auto& m : images) {
    require_gl2z(m, "monodromy_image_type");
    if (m.is_identity()) continue;
    if (element_order(m) != 2 || finite_order_class(m).tag != FiniteClass::Reflection) return MonodromyImage::Other;
    gens.push_back(m);
  }

  bool infinite = false;
  for (std::size_t i = 0; i < gens.size() && !infinite; ++i)
    for (std::size_t j = i + 1; j < gens.size() && !infinite; ++j) infinite = abs(trace(gens[i] * gens[j])) > 2;
  if (!infinite) return MonodromyImage::Other;

  // Breadth-first over products of length <= 12.  A virtually cyclic group
  // has linear growth, so a huge ball already rules out D_infinity.
  constexpr std::size_t kBallLimit = 1'000'000;
  std::set<IntMatrix> seen{kIdentity};
  std::vector<IntMatrix> frontier{kIdentity};
  for (int len = 1; len <= 12 && !frontier.empty(); ++len) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        IntMatrix y = x * g;
        if (y == kMinusIdentity) return MonodromyImage::Other;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    if (seen.size() > kBallLimit) return MonodromyImage::Other;
    frontier = std::move(next);
  }
  return MonodromyImage::DihedralInfinite;
}

}  // namespace solfour::gl2z
