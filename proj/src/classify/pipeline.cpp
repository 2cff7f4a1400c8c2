#include "solfour/classify/pipeline.hpp"

#include "solfour/ext/analysis.hpp"

namespace solfour::classify {

namespace {

IntMatrix u_block(const PillowcaseInvariant& psi) {
  IntMatrix a(2, 2);
  a(0, 0) = psi.p;
  a(0, 1) = psi.q;
  a(1, 0) = -psi.r;
  a(1, 1) = -psi.p;
  return a;
}

IntVector eigen_generator(const IntMatrix& a) {
  const auto ker = kernel_basis(a - IntMatrix::identity(2));
  if (ker.size() != 1) throw std::logic_error("u block must have a rank-1 fixed lattice");
  return ker.front();
}

}  // namespace

ext::ExtensionData pillowcase_data(const PillowcaseInvariant& psi) {
  const PillowcaseInvariant v = validate(psi.matrix());
  const IntMatrix a = u_block(v);
  const IntVector ef = eigen_generator(a);

  ext::ExtensionData d;
  d.kind = ext::QuotientKind::Dinf;
  d.rank = 3;
  d.action["u"] = IntMatrix::block_diagonal(a, -IntMatrix::identity(1));
  d.action["v"] = IntMatrix::diagonal({1, -1, -1});
  d.cocycles["u"] = IntVector(std::vector<Int>{ef[0], ef[1], Int(0)});
  d.cocycles["v"] = IntVector{1, 0, 0};
  d.axis_signs = {{"u", -1}, {"v", -1}};
  return d;
}

PillowcaseGroup presentation_from_invariant(const PillowcaseInvariant& psi) {
  ext::ExtensionData d = pillowcase_data(psi);
  const IntMatrix a = d.action.at("u").submatrix(0, 0, 2, 2);
  const IntVector ef = eigen_generator(a);
  ext::ExtensionGroup g(std::move(d));
  if (ext::find_torsion(g, 7)) throw std::logic_error("pillowcase extension has torsion");

  enum : std::size_t { U, V, X, Y, Z };
  auto xy = [](const Int& ex, const Int& ey) {
    ext::Word w;
    if (ex != 0) w.push_back({X, to_long(ex)});
    if (ey != 0) w.push_back({Y, to_long(ey)});
    return w;
  };
  auto conj = [](std::size_t by, std::size_t what) { return ext::Word{{by, 1}, {what, 1}, {by, -1}}; };

  ext::FpPresentation p({"u", "v", "x", "y", "z"});
  p.add_relator({{X, 1}, {Y, 1}, {X, -1}, {Y, -1}});
  p.add_relator({{X, 1}, {Z, 1}, {X, -1}, {Z, -1}});
  p.add_relator({{Y, 1}, {Z, 1}, {Y, -1}, {Z, -1}});
  // u x u^-1 = x^a y^c, u y u^-1 = x^b y^d, u z u^-1 = z^-1, u^2 = x^e y^f
  p.add_relator(ext::concat(conj(U, X), ext::inverse(xy(a(0, 0), a(1, 0)))));
  p.add_relator(ext::concat(conj(U, Y), ext::inverse(xy(a(0, 1), a(1, 1)))));
  p.add_relator(ext::concat(conj(U, Z), {{Z, 1}}));
  p.add_relator(ext::concat({{U, 2}}, ext::inverse(xy(ef[0], ef[1]))));
  // v^2 = x, v y v^-1 = y^-1, v z v^-1 = z^-1
  p.add_relator({{V, 2}, {X, -1}});
  p.add_relator(ext::concat(conj(V, Y), {{Y, 1}}));
  p.add_relator(ext::concat(conj(V, Z), {{Z, 1}}));
  return {std::move(p), std::move(g), a, ef};
}

std::string_view to_string(ExtractionFailure f) {
  switch (f) {
    case ExtractionFailure::BadShape: return "expected 3x3 actions and vectors in Z^3";
    case ExtractionFailure::NotInvolutions: return "U and V must be involutions";
    case ExtractionFailure::FiniteOrder: return "UV has finite order";
    case ExtractionFailure::NotHyperbolic: return "UV is not hyperbolic on a rank-2 sublattice";
    case ExtractionFailure::NotFiniteIndex: return "N + C has infinite index";
    case ExtractionFailure::BadCocycle: return "cocycles incompatible with the actions";
    case ExtractionFailure::Torsion: return "extension has torsion";
    case ExtractionFailure::NoAdaptedBasis: return "v does not act on N as a reflection";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(ExtractionFailure f) { throw ExtractionError(f, "from_extension: " + std::string(to_string(f))); }

IntMatrix restrict_to(const IntMatrix& m, const std::vector<IntVector>& basis) {
  std::vector<IntVector> cols;
  for (const auto& b : basis) {
    auto c = coordinates_in(basis, m * b, 3);
    if (!c) throw std::logic_error("sublattice is not invariant");
    cols.push_back(*c);
  }
  return IntMatrix::from_columns(cols, basis.size());
}

}  // namespace

PillowcaseInvariant from_extension(const IntMatrix& U, const IntMatrix& V, const IntVector& s_u, const IntVector& s_v) {
  if (U.rows() != 3 || U.cols() != 3 || V.rows() != 3 || V.cols() != 3 || s_u.size() != 3 || s_v.size() != 3)
    fail(ExtractionFailure::BadShape);
  if (!(U * U).is_identity() || !(V * V).is_identity()) fail(ExtractionFailure::NotInvolutions);
  const IntMatrix W = U * V;
  if (mat_pow(W, 12).is_identity()) fail(ExtractionFailure::FiniteOrder);

  const IntMatrix w1 = W - IntMatrix::identity(3);
  const auto kw = kernel_basis(w1);
  const auto iw = image_basis(w1);
  const auto C = saturation(kw, 3);
  const auto N = saturation(iw, 3);
  if (C.size() != 1 || N.size() != 2) fail(ExtractionFailure::NotHyperbolic);
  if (determinant(IntMatrix::from_columns({N[0], N[1], C[0]}, 3)) == 0) fail(ExtractionFailure::NotFiniteIndex);

  std::optional<ext::ExtensionGroup> g;
  try {
    ext::ExtensionData d;
    d.kind = ext::QuotientKind::Dinf;
    d.rank = 3;
    d.action = {{"u", U}, {"v", V}};
    d.cocycles = {{"u", s_u}, {"v", s_v}};
    g.emplace(std::move(d));
  } catch (const std::invalid_argument&) {
    fail(ExtractionFailure::BadCocycle);
  }
  if (ext::find_torsion(*g, 7)) fail(ExtractionFailure::Torsion);

  const IntMatrix un = restrict_to(U, N);
  const IntMatrix vn = restrict_to(V, N);
  if (abs(trace(un * vn)) <= 2) fail(ExtractionFailure::NotHyperbolic);

  const IntMatrix id2 = IntMatrix::identity(2);
  const auto plus = kernel_basis(vn - id2);
  const auto minus = kernel_basis(vn + id2);
  if (plus.size() != 1 || minus.size() != 1) fail(ExtractionFailure::NoAdaptedBasis);
  const IntMatrix b = IntMatrix::from_columns({plus[0], minus[0]}, 2);
  if (abs(determinant(b)) != 1) fail(ExtractionFailure::NoAdaptedBasis);

  const IntMatrix a = inverse_unimodular(b) * un * b;
  const IntMatrix d = IntMatrix::diagonal({1, -1});
  // A D = (D A)^-1 as A^2 = D^2 = I, so either product normalizes the same way.
  return normalize(d * a);
}

HomologyReport homology_report(const PillowcaseInvariant& psi) {
  const PillowcaseGroup pg = presentation_from_invariant(psi);
  const auto ab = ext::abelianization_map(pg.presentation);
  HomologyReport r{normalize(psi), ab.invariants(), {}, false, {}};
  for (std::size_t j = 0; j < ab.generators.size(); ++j) r.orders.emplace_back(ab.generators[j], ab.generator_order(j));
  const auto w1 = ext::w1_factors_through_z4(pg.group);
  r.w1_factors = w1.factors;
  r.w1_values = w1.generator_values;
  return r;
}

}  // namespace solfour::classify
