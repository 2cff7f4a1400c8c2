#include "solfour/ext/catalog.hpp"

namespace solfour::ext::catalog {

namespace {

const IntMatrix kSigmaV{{17, 24}, {-12, -17}};

}  // namespace

ExtensionGroup dinf() {
  ExtensionData d;
  d.kind = QuotientKind::Dinf;
  return ExtensionGroup(std::move(d));
}

ExtensionGroup g2() {
  ExtensionData d;
  d.kind = QuotientKind::Zq;
  d.rank = 2;
  d.quotient_names = {"u"};
  d.lattice_names = {"s", "t"};
  d.action["u"] = -IntMatrix::identity(2);
  d.axis_signs["u"] = 1;
  return ExtensionGroup(std::move(d));
}

ExtensionGroup b1() {
  ExtensionData d;
  d.kind = QuotientKind::C2;
  d.rank = 3;
  d.quotient_names = {"x"};
  d.lattice_names = {"t", "x2", "y"};
  d.action["x"] = IntMatrix::diagonal({1, 1, -1});
  d.cocycles["x"] = IntVector{0, 1, 0};
  d.axis_signs["x"] = 1;
  return ExtensionGroup(std::move(d));
}

FpPresentation b1_presentation() {
  FpPresentation p({"t", "x", "y"});
  p.add_relation("t x = x t");
  p.add_relation("t y = y t");
  p.add_relation("x y x^-1 = y^-1");
  return p;
}

std::vector<GroupElement> b1_theta_images(const ExtensionGroup& b1) {
  return {b1.evaluate("t^3 x^2"), b1.evaluate("t^4 x^3"), b1.evaluate("y")};
}

ExtensionGroup b1_sd_theta() {
  ExtensionData d;
  d.kind = QuotientKind::ZxC2;
  d.rank = 3;
  d.quotient_names = {"s", "x"};
  d.lattice_names = {"t", "x2", "y"};
  // theta on <t, x^2, y>: t -> t^3 x^2, x^2 -> (t^4 x^3)^2 = t^8 x^6, y -> y.
  d.action["s"] = IntMatrix{{3, 8, 0}, {1, 3, 0}, {0, 0, 1}};
  d.action["x"] = IntMatrix::diagonal({1, 1, -1});
  d.cocycles["x"] = IntVector{0, 1, 0};
  // s x s^-1 = t^4 x^3, so [s, x] = t^4 x^2.
  d.commutator = IntVector{4, 1, 0};
  d.axis_signs = {{"s", 1}, {"x", 1}};
  return ExtensionGroup(std::move(d));
}

namespace {

ExtensionGroup sigma_with_u(const IntMatrix& u_action) {
  ExtensionData d;
  d.kind = QuotientKind::Dinf;
  d.rank = 2;
  d.action["u"] = u_action;
  d.action["v"] = kSigmaV;
  d.cocycles["u"] = IntVector{1, 0};
  d.cocycles["v"] = IntVector{3, -2};
  d.axis_signs = {{"u", -1}, {"v", -1}};
  return ExtensionGroup(std::move(d));
}

}  // namespace

ExtensionGroup sigma() { return sigma_with_u(IntMatrix::diagonal({1, -1})); }

ExtensionGroup sigma_printed() { return sigma_with_u(IntMatrix::identity(2)); }

FpPresentation sigma_presentation() {
  FpPresentation p({"u", "v", "x", "y"});
  p.add_relation("x y = y x");
  p.add_relation("u^2 = x");
  p.add_relation("u y u^-1 = y^-1");
  p.add_relation("v^2 = x^3 y^-2");
  p.add_relation("v x v^-1 = x^17 y^-12");
  p.add_relation("v y v^-1 = x^24 y^-17");
  return p;
}

std::vector<GroupElement> sigma_f_images(const ExtensionGroup& sigma) {
  return {sigma.evaluate("v"), sigma.evaluate("u"), sigma.evaluate("x^3 y^-2"), sigma.evaluate("x^4 y^-3")};
}

IntMatrix sigma_f_lattice_matrix() { return {{3, 4}, {-2, -3}}; }

ExtensionGroup sigma_times_z() {
  ExtensionData d;
  d.kind = QuotientKind::Dinf;
  d.rank = 3;
  d.action["u"] = IntMatrix::diagonal({1, -1, 1});
  d.action["v"] = IntMatrix::block_diagonal(kSigmaV, IntMatrix::identity(1));
  d.cocycles["u"] = IntVector{1, 0, 0};
  d.cocycles["v"] = IntVector{3, -2, 0};
  d.axis_signs = {{"u", -1}, {"v", -1}};
  return ExtensionGroup(std::move(d));
}

ExtensionGroup kb_monodromy(const IntMatrix& psi) {
  if (psi.rows() != 2 || psi.cols() != 2) throw DimensionError("kb_monodromy needs a 2x2 matrix");
  ExtensionData d;
  d.kind = QuotientKind::Klein;
  d.rank = 2;
  d.lattice_names = {"e1", "e2"};
  d.action["x"] = IntMatrix::diagonal({1, -1});
  d.action["y"] = psi;
  d.axis_signs = {{"x", -1}, {"y", 1}};
  return ExtensionGroup(std::move(d));
}

IntMatrix bordered_matrix(const IntVector& xi, const IntMatrix& psi) {
  if (xi.size() != 2 || psi.rows() != 2 || psi.cols() != 2) throw DimensionError("bordered matrix needs xi in Z^2, 2x2 psi");
  IntMatrix theta = IntMatrix::block_diagonal(IntMatrix::identity(1), psi);
  theta(1, 0) = xi[0];
  theta(2, 0) = xi[1];
  return theta;
}

ExtensionGroup bordered(const IntVector& xi, const IntMatrix& psi) {
  ExtensionData d;
  d.kind = QuotientKind::Zq;
  d.rank = 3;
  d.action["t"] = bordered_matrix(xi, psi);
  d.axis_signs["t"] = 1;
  return ExtensionGroup(std::move(d));
}

}  // namespace solfour::ext::catalog
