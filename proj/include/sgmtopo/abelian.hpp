#pragma once

// Finitely generated abelian groups in invariant-factor normal form, and
// homomorphisms between them written on the normal-form generators.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgmtopo/int_matrix.hpp"
#include "sgmtopo/integer.hpp"

namespace sgmtopo {

/// Default limit on |H|*|Q| for extension enumeration and on |A_i| for
/// element-level exactness checks.
inline constexpr long kDefaultEnumerationBound = 4096;

/// Z^rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... | d_t and every d_i >= 2.
///
/// Generators are ordered torsion first (orders d_1..d_t), then the `rank`
/// free generators. Every constructor canonicalizes, so operator== is
/// isomorphism.
class FinAbGroup {
 public:
  /// The trivial group.
  FinAbGroup() = default;

  /// Normal form of Z^rank + sum Z/torsion_i. Entries must be >= 2, in any
  /// order.
  static FinAbGroup canonicalize(std::size_t rank, std::vector<Integer> torsion);

  /// Like canonicalize, but 1 entries are dropped and 0 entries count as
  /// free summands. Used for cokernels of diagonal presentations.
  static FinAbGroup from_diagonal(std::size_t extra_rank, const std::vector<Integer>& diag);

  /// Z/m for m >= 1 (m = 1 is trivial); m = 0 gives Z.
  static FinAbGroup cyclic(const Integer& m);
  static FinAbGroup free(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  bool is_finite() const { return rank_ == 0; }
  bool is_trivial() const { return rank_ == 0 && factors_.empty(); }

  std::size_t torsion_generator_count() const { return factors_.size(); }
  std::size_t generator_count() const { return factors_.size() + rank_; }
  /// Order of the i-th normal-form generator; 0 for free generators.
  Integer generator_order(std::size_t i) const;

  FinAbGroup torsion_subgroup() const;
  FinAbGroup free_part() const { return free(rank_); }

  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
  /// Canonical listing order: rank, then factor count, then factors
  /// lexicographically.
  friend bool operator<(const FinAbGroup& a, const FinAbGroup& b);

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> factors_;
};

/// |G|, or nullopt when G is infinite.
std::optional<Integer> order(const FinAbGroup& g);

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// prime -> exponents e (ascending, with multiplicity) of the Z/p^e summands.
using PrimaryDecomposition = std::map<Integer, std::vector<unsigned>>;

/// Throws InvalidInput for infinite groups.
PrimaryDecomposition primary_decomposition(const FinAbGroup& g);
FinAbGroup from_primary_decomposition(const PrimaryDecomposition& parts);

/// H with H + H = G, when it exists. Throws InvalidInput for infinite G.
std::optional<FinAbGroup> is_double(const FinAbGroup& g);

enum class WallShape { Double, DoublePlusZ2, None };

std::string to_string(WallShape shape);

struct WallAlternatives {
  std::set<WallShape> shapes;
  /// The group H of the matching shape; empty when shapes == {None}.
  std::optional<FinAbGroup> half;
};

/// Which of T = H + H or T = H + H + Z/2 is possible for the finite group T.
WallAlternatives wall_alternatives(const FinAbGroup& t);

/// All abelian G (up to isomorphism) with a subgroup isomorphic to `sub`
/// and corresponding quotient isomorphic to `quotient`, in canonical order.
/// Throws ResourceLimitExceeded when |sub|*|quotient| > bound.
std::vector<FinAbGroup> enumerate_extensions(const FinAbGroup& sub, const FinAbGroup& quotient,
                                             long bound = kDefaultEnumerationBound);

/// Nonzero Littlewood-Richardson coefficient c^outer_{inner,content}.
/// Partitions are weakly decreasing positive parts.
bool littlewood_richardson_nonzero(const std::vector<unsigned>& outer,
                                   const std::vector<unsigned>& inner,
                                   const std::vector<unsigned>& content);

/// Homomorphism between normal-form groups. Column j of the matrix is the
/// image of the j-th source generator in target coordinates; torsion
/// coordinates are stored reduced into [0, d_i).
class GroupHom {
 public:
  /// Validates shape and well-definedness (order of each source generator
  /// kills its image). Throws InvalidInput otherwise.
  GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix);

  static GroupHom zero(const FinAbGroup& source, const FinAbGroup& target);
  static GroupHom identity(const FinAbGroup& g);

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  /// Image of an element given in source coordinates, reduced in the target.
  std::vector<Integer> apply(std::span<const Integer> element) const;
  bool is_zero() const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  IntMatrix matrix_;
};

/// second ∘ first.
GroupHom compose(const GroupHom& second, const GroupHom& first);

/// Reduces element coordinates modulo the torsion factors of g.
std::vector<Integer> reduce_element(const FinAbGroup& g, std::vector<Integer> element);

}  // namespace sgmtopo
