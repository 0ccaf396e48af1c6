#pragma once

// Exact integer matrix algebra: Smith and Hermite normal forms, ranks,
// cokernels and lattice helpers used by the homology and exactness engines.

#include <cstddef>
#include <vector>

#include "sgmtopo/abelian.hpp"
#include "sgmtopo/int_matrix.hpp"

namespace sgmtopo {

/// U * A * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ...,
/// zeros last, all entries >= 0.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of S.
  std::vector<Integer> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Smith normal form. Each round pivots on a nonzero entry of minimal
/// absolute value in the remaining block.
SnfResult smith_normal_form(const IntMatrix& a);

struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};

/// Row-style Hermite normal form: U * A = H, H in row echelon form with
/// positive pivots and entries above each pivot in [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& a);

/// Z^rows / image(A).
FinAbGroup cokernel(const IntMatrix& a);

std::size_t image_rank(const IntMatrix& a);
std::size_t kernel_rank(const IntMatrix& a);

/// Rank over Q by fraction-free (Bareiss) elimination. Independent of the
/// Smith form path.
std::size_t rank_over_rationals(const IntMatrix& a);

/// Rank over F_p, p prime.
std::size_t rank_mod_prime(const IntMatrix& a, const Integer& p);

/// Exact determinant of a square matrix (Bareiss).
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Z^g / image(relations) in normal form, with the coordinate changes
/// between the g presentation generators and the normal-form generators.
struct PresentedGroup {
  FinAbGroup group;
  /// generator_count x g: presentation coordinates -> normal-form coordinates.
  IntMatrix to_canonical;
  /// g x generator_count: column i is a lift of normal-form generator i.
  IntMatrix from_canonical;
};

PresentedGroup present_cokernel(const IntMatrix& relations);

/// Columns spanning {x in Z^cols : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical basis (nonzero rows of the Hermite form) of the lattice spanned
/// by the columns of `generators`, returned as rows.
IntMatrix lattice_hermite_basis(const IntMatrix& generators);

}  // namespace sgmtopo
