#pragma once

#include "solfour/exact/int_matrix.hpp"
#include "solfour/ext/extension_group.hpp"
#include "solfour/ext/presentation.hpp"

// Named groups.  Lattice bases and generator names follow the usual
// presentations; the pillowcase family lives with the classifier.
namespace solfour::ext::catalog {

/// <u, v | u^2 = v^2 = 1> as an extension with trivial lattice.
ExtensionGroup dinf();

/// Z^2 x|_{-I} Z: quotient generator u, lattice s, t.
ExtensionGroup g2();

/// Z x Kb over the lattice <t, x^2, y> with quotient generated by x.
ExtensionGroup b1();
/// <t, x, y | tx = xt, ty = yt, x y x^-1 = y^-1>.
FpPresentation b1_presentation();
/// Images of t, x, y under theta(t) = t^3 x^2, theta(x) = t^4 x^3, theta(y) = y.
std::vector<GroupElement> b1_theta_images(const ExtensionGroup& b1);

/// B1 x|_theta Z: quotient generators s (infinite) and x (order two).
ExtensionGroup b1_sd_theta();

/// The D_inf-by-Z^2 Sol^3 group with u^2 = x, u y u^-1 = y^-1,
/// v^2 = x^3 y^-2, v x v^-1 = x^17 y^-12, v y v^-1 = x^24 y^-17.
ExtensionGroup sigma();
FpPresentation sigma_presentation();
/// Same data with u acting trivially, as in u y u^-1 = y.
ExtensionGroup sigma_printed();
/// Images of u, v, x, y under the involution f swapping u and v.
std::vector<GroupElement> sigma_f_images(const ExtensionGroup& sigma);
/// Matrix of f on <x, y>.
IntMatrix sigma_f_lattice_matrix();

/// sigma x Z, with the Z factor as a third lattice coordinate.
ExtensionGroup sigma_times_z();

/// Z^2 x|_theta pi_1(Kb) with theta(x) = diag(1,-1), theta(y) = psi.
ExtensionGroup kb_monodromy(const IntMatrix& psi);

/// Z^3 x|_Theta Z for the bordered matrix Theta = [[1,0],[xi,psi]].
IntMatrix bordered_matrix(const IntVector& xi, const IntMatrix& psi);
ExtensionGroup bordered(const IntVector& xi, const IntMatrix& psi);

}  // namespace solfour::ext::catalog
