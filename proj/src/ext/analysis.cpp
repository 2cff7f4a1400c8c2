#include "solfour/ext/analysis.hpp"

#include <stdexcept>

#include "solfour/exact/smith.hpp"

namespace solfour::ext {

bool is_torsion(const ExtensionGroup& g, const GroupElement& a) {
  const auto k = g.quotient_order(a.q);
  if (!k) return false;
  return g.power(a, static_cast<long>(*k)).t.is_zero();
}

std::optional<GroupElement> find_torsion(const ExtensionGroup& g, int max_word_len) {
  if (g.kind() != QuotientKind::Dinf) throw UnsupportedKind("find_torsion requires quotient kind Dinf");
  const IntMatrix id = IntMatrix::identity(g.rank());
  for (std::int64_t len = 1; len <= max_word_len; len += 2)
    for (std::int64_t first = 0; first < 2; ++first) {
      const QuotientWord w{len, first};
      const GroupElement lift = g.quotient_lift(w);
      const IntVector s = g.multiply(lift, lift).t;
      // (t, w)^2 = t + action(w) t + s(w)
      if (auto t = solve_integer(id + g.action(w), -s)) return GroupElement{*t, w};
    }
  return std::nullopt;
}

CokernelInvariants AbelianizationMap::invariants() const {
  CokernelInvariants out;
  for (const auto& d : moduli) {
    if (d == 0)
      ++out.free_rank;
    else if (d != 1)
      out.torsion.push_back(d);
  }
  return out;
}

IntVector AbelianizationMap::coordinates(const IntVector& exponent_sums) const {
  IntVector y = P * exponent_sums;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (moduli[i] != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), moduli[i].get_mpz_t());
  return y;
}

std::optional<Int> AbelianizationMap::order_of(const IntVector& exponent_sums) const {
  const IntVector y = coordinates(exponent_sums);
  Int order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    if (moduli[i] == 0) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), moduli[i].get_mpz_t(), y[i].get_mpz_t());
    const Int part = moduli[i] / g;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
  }
  return order;
}

std::optional<Int> AbelianizationMap::generator_order(std::size_t j) const {
  IntVector e(generators.size());
  if (j >= e.size()) throw std::out_of_range("generator index out of range");
  e[j] = 1;
  return order_of(e);
}

AbelianizationMap abelianization_map(const FpPresentation& p) {
  const std::size_t k = p.generators().size();
  AbelianizationMap out;
  out.generators = p.generators();
  if (p.relators().empty()) {
    out.moduli.assign(k, 0);
    out.P = out.P_inv = IntMatrix::identity(k);
    return out;
  }
  // H_1 = Z^k / (row span of R) = coker(R^T).
  const auto snf = smith_normal_form(p.relator_matrix().transpose());
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < k; ++i) out.moduli.push_back(i < d.size() ? d[i] : Int(0));
  out.P = snf.P;
  out.P_inv = snf.P_inv;
  return out;
}

CokernelInvariants abelianization(const ExtensionGroup& g) { return abelianization_map(g.presentation()).invariants(); }

int orientation_character(const ExtensionGroup& g, const GroupElement& a) {
  if (!g.is_tagged()) throw std::invalid_argument("orientation character needs axis signs");
  const int sign = sgn(determinant(g.action(a.q))) * g.axis_sign(a.q);
  return sign > 0 ? 0 : 1;
}

W1Factoring w1_factors_through_z4(const ExtensionGroup& g) {
  const FpPresentation p = g.presentation();
  const auto ab = abelianization_map(p);
  const std::size_t k = p.generators().size();

  IntVector c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = orientation_character(g, g.generator(j));
  for (const auto& r : p.relators())
    if (dot(c, p.exponent_sums(r)) % 2 != 0) throw std::logic_error("orientation character is not a homomorphism");

  // Character in H_1 coordinates: w = c P^-1.
  IntVector w(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) w[i] += c[j] * ab.P_inv(j, i);

  std::vector<int> phi(k, 0);
  W1Factoring out;
  out.factors = true;
  for (std::size_t i = 0; i < k && out.factors; ++i) {
    const Int& d = ab.moduli[i];
    const int parity = mpz_odd_p(w[i].get_mpz_t()) ? 1 : 0;
    if (d == 1 && parity) throw std::logic_error("orientation character does not factor through H_1");
    bool found = false;
    for (int x = parity; x < 4 && !found; x += 2) {
      if (Int(d * x) % 4 != 0) continue;
      phi[i] = x;
      found = true;
    }
    out.factors = found;
  }
  if (!out.factors) return out;
  for (std::size_t j = 0; j < k; ++j) {
    Int v = 0;
    for (std::size_t i = 0; i < k; ++i) v += phi[i] * ab.P(i, j);
    mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), 4);
    out.generator_values.push_back(static_cast<int>(v.get_si()));
  }
  return out;
}

bool is_central(const ExtensionGroup& g, const GroupElement& a) {
  const std::size_t total = g.quotient_generator_count() + g.rank();
  for (std::size_t j = 0; j < total; ++j) {
    const GroupElement x = g.generator(j);
    if (!(g.multiply(a, x) == g.multiply(x, a))) return false;
  }
  return true;
}

namespace {

// Quotient elements generating the part of the centre of Q that acts
// trivially; the flag marks infinite order.
std::vector<std::pair<QuotientWord, bool>> central_quotient_candidates(const ExtensionGroup& g) {
  std::vector<std::pair<QuotientWord, bool>> out;
  auto trivial = [&](const QuotientWord& q) { return g.action(q).is_identity(); };
  switch (g.kind()) {
    case QuotientKind::C2:
      if (trivial({1, 0})) out.push_back({{1, 0}, false});
      break;
    case QuotientKind::Zq:
      for (std::int64_t m = 1; m <= 12; ++m)
        if (trivial({m, 0})) {
          out.push_back({{m, 0}, true});
          break;
        }
      break;
    case QuotientKind::ZxC2:
      if (trivial({0, 1})) out.push_back({{0, 1}, false});
      for (std::int64_t m = 1; m <= 12; ++m) {
        if (trivial({m, 0})) {
          out.push_back({{m, 0}, true});
          break;
        }
        if (trivial({m, 1})) {
          out.push_back({{m, 1}, true});
          break;
        }
      }
      break;
    case QuotientKind::Klein:
      if (trivial({2, 0})) out.push_back({{2, 0}, true});
      break;
    default: break;
  }
  return out;
}

}  // namespace

CenterInfo center(const ExtensionGroup& g) {
  const std::size_t n = g.rank();
  const std::size_t k = g.quotient_generator_count();
  IntMatrix stacked(n * k, n);
  for (std::size_t j = 0; j < k; ++j) {
    const IntMatrix d = g.generator_action(j) - IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = d(r, c);
  }

  CenterInfo out;
  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      out.fixed_lattice.push_back(e);
    }
  } else {
    out.fixed_lattice = kernel_basis(stacked);
  }
  out.rank = out.fixed_lattice.size();

  for (const auto& [q0, infinite] : central_quotient_candidates(g)) {
    for (long j = 1; j <= 12; ++j) {
      const GroupElement lift = g.power(g.quotient_lift(q0), j);
      // (t, q) is central iff (action(g) - I) t = lift(q) g - g lift(q) on translations.
      IntVector rhs(n * k);
      for (std::size_t gi = 0; gi < k; ++gi) {
        const GroupElement x = g.generator(gi);
        const IntVector d = g.multiply(lift, x).t - g.multiply(x, lift).t;
        for (std::size_t r = 0; r < n; ++r) rhs[gi * n + r] = d[r];
      }
      const auto t = n == 0 ? std::optional<IntVector>(IntVector(0)) : solve_integer(stacked, rhs);
      if (!t) continue;
      out.quotient_elements.push_back(g.multiply(g.lattice_element(*t), lift));
      if (infinite) ++out.rank;
      break;
    }
  }
  return out;
}

std::vector<GroupElement> CenterInfo::generators(const ExtensionGroup& g) const {
  std::vector<GroupElement> out;
  for (const auto& v : fixed_lattice) out.push_back(g.lattice_element(v));
  out.insert(out.end(), quotient_elements.begin(), quotient_elements.end());
  return out;
}

std::vector<IntVector> i_lattice(const ExtensionGroup& g) {
  const auto ab = abelianization_map(g.presentation());
  const std::size_t n = g.rank();
  const std::size_t k = g.quotient_generator_count();
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < ab.moduli.size(); ++i)
    if (ab.moduli[i] == 0) free_rows.push_back(i);

  if (free_rows.empty()) {
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  IntMatrix m(free_rows.size(), n);
  for (std::size_t r = 0; r < free_rows.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) m(r, i) = ab.P(free_rows[r], k + i);
  return kernel_basis(m);
}

bool is_block_diagonalizable(const IntMatrix& theta) {
  if (theta.rows() != 3 || theta.cols() != 3 || theta(0, 0) != 1 || theta(0, 1) != 0 || theta(0, 2) != 0)
    throw std::invalid_argument("bordered matrix must have first row (1, 0, 0)");
  const IntMatrix psi = theta.submatrix(1, 1, 2, 2);
  if (abs(determinant(psi)) != 1 || abs(trace(psi)) <= 2)
    throw std::invalid_argument("bordered matrix needs a hyperbolic block in GL(2,Z)");
  IntVector xi(2);
  xi[0] = theta(1, 0);
  xi[1] = theta(2, 0);
  return in_image(IntMatrix::identity(2) - psi, xi);
}

bool verify_homomorphism(const FpPresentation& src, std::span<const GroupElement> images, const ExtensionGroup& target) {
  if (images.size() != src.generators().size()) throw std::invalid_argument("one image per generator required");
  const GroupElement id = target.identity();
  for (const auto& rel : src.relators()) {
    GroupElement acc = id;
    for (const auto& s : rel) acc = target.multiply(acc, target.power(images[s.gen], s.exp));
    if (!(acc == id)) return false;
  }
  return true;
}

bool verify_homomorphism(const FpPresentation& src, const std::map<std::string, GroupElement>& images,
                         const ExtensionGroup& target) {
  std::vector<GroupElement> v;
  for (const auto& name : src.generators()) {
    auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("no image for generator '" + name + "'");
    v.push_back(it->second);
  }
  return verify_homomorphism(src, v, target);
}

namespace {

bool infinite_order(const IntMatrix& m) { return !mat_pow(m, 12).is_identity(); }

}  // namespace

bool has_hyperbolic_direction(const ExtensionGroup& g) {
  switch (g.kind()) {
    case QuotientKind::Zq:
    case QuotientKind::ZxC2: return infinite_order(g.generator_action(0));
    case QuotientKind::Dinf: return infinite_order(g.generator_action(0) * g.generator_action(1));
    case QuotientKind::Klein: return infinite_order(g.generator_action(0)) || infinite_order(g.generator_action(1));
    default: return false;
  }
}

std::size_t hirsch_length(const ExtensionGroup& g) {
  switch (g.kind()) {
    case QuotientKind::Zq:
    case QuotientKind::ZxC2:
    case QuotientKind::Dinf: return g.rank() + 1;
    case QuotientKind::Klein: return g.rank() + 2;
    default: return g.rank();
  }
}

std::string_view to_string(Geometry geo) {
  switch (geo) {
    case Geometry::Sol3xE1: return "Sol3xE1";
    case Geometry::Sol3: return "Sol3";
    case Geometry::NotSol: return "NotSol";
  }
  return "?";
}

Geometry geometry(const ExtensionGroup& g) {
  if (!has_hyperbolic_direction(g)) return Geometry::NotSol;
  switch (hirsch_length(g)) {
    case 4: return Geometry::Sol3xE1;
    case 3: return Geometry::Sol3;
    default: return Geometry::NotSol;
  }
}

}  // namespace solfour::ext
