#pragma once

#include <optional>
#include <span>
#include <vector>

#include "solfour/exact/int_matrix.hpp"

namespace solfour {

/// Some x with M x = b over the integers, or nullopt if none exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);
bool in_image(const IntMatrix& m, const IntVector& b);

/// Canonical basis of the integer kernel of M (as a map Z^cols -> Z^rows),
/// in Hermite normal form; a rank-1 kernel is a primitive vector with first
/// nonzero coordinate positive.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Canonical basis of the column image of M.
std::vector<IntVector> image_basis(const IntMatrix& m);

/// Basis of the smallest direct summand of Z^n containing span(vectors).
std::vector<IntVector> saturation(std::span<const IntVector> vectors, std::size_t n);

/// Row Hermite normal form of the span: the unique echelon basis with
/// positive pivots and entries above each pivot reduced into [0, pivot).
std::vector<IntVector> hermite_basis(std::span<const IntVector> vectors, std::size_t n);

/// Primitive vector on the same ray, sign fixed so the first nonzero
/// coordinate is positive.  The zero vector is returned unchanged.
IntVector primitive_normalized(IntVector v);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // each > 1, d_i | d_{i+1}

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Invariants of Z^rows / Im(M).
CokernelInvariants cokernel_invariants(const IntMatrix& m);

/// Index [span : sublattice] for bases of equal rank; 0 when the sublattice
/// has lower rank than `span`.
Int sublattice_index(std::span<const IntVector> sub, std::span<const IntVector> span, std::size_t n);

/// Coordinates of v in the given basis, if v lies in the integer span.
std::optional<IntVector> coordinates_in(std::span<const IntVector> basis, const IntVector& v, std::size_t n);

}  // namespace solfour
