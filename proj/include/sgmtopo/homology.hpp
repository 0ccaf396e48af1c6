#pragma once

// Chain complexes of free abelian groups, graded homology over Z, Q and
// F_p, and the homology-sphere / homology-ball predicates.

#include <map>
#include <string>
#include <vector>

#include "sgmtopo/abelian.hpp"
#include "sgmtopo/int_matrix.hpp"

namespace sgmtopo {

/// Coefficient ring: Z, Q or F_p with p prime.
class Coefficients {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  /// Throws InvalidInput unless p is prime.
  static Coefficients prime_field(const Integer& p);

  /// "Z", "Q" or "Fp:P".
  static Coefficients parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  /// 0 for Z and Q.
  const Integer& characteristic() const { return characteristic_; }
  std::string to_string() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind kind, Integer characteristic)
      : kind_(kind), characteristic_(std::move(characteristic)) {}

  Kind kind_;
  Integer characteristic_;
};

/// Cells per degree 0..max_degree and boundary matrices
/// d_k : C_k -> C_{k-1} of shape cells[k-1] x cells[k] for k = 1..max_degree.
class ChainComplex {
 public:
  /// Validates shapes and d_{k} * d_{k+1} = 0. Missing boundaries are zero
  /// maps. Throws InvalidInput.
  ChainComplex(std::vector<std::size_t> cells, std::map<int, IntMatrix> boundaries);

  int max_degree() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t cells(int degree) const;
  const std::vector<std::size_t>& cell_counts() const { return cells_; }
  /// d_degree; the zero map of the right shape outside 1..max_degree.
  IntMatrix boundary(int degree) const;
  const std::map<int, IntMatrix>& boundaries() const { return boundaries_; }

 private:
  std::vector<std::size_t> cells_;
  std::map<int, IntMatrix> boundaries_;
};

/// Degree-indexed groups H_0..H_top. Degrees outside [0, top] and absent
/// degrees are trivial. Over a field every group is free (its rank is the
/// dimension).
class GradedGroup {
 public:
  GradedGroup() = default;
  GradedGroup(int top_degree, std::map<int, FinAbGroup> groups,
              Coefficients coefficients = Coefficients::integers());

  /// Builds from a dense list H_0, H_1, ...
  static GradedGroup from_list(std::vector<FinAbGroup> groups,
                               Coefficients coefficients = Coefficients::integers());

  int top_degree() const { return top_degree_; }
  const Coefficients& coefficients() const { return coefficients_; }
  FinAbGroup at(int degree) const;
  const std::map<int, FinAbGroup>& groups() const { return groups_; }

  std::string to_string() const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

 private:
  int top_degree_ = 0;
  std::map<int, FinAbGroup> groups_;  // only nontrivial entries
  Coefficients coefficients_ = Coefficients::integers();
};

GradedGroup homology(const ChainComplex& complex, const Coefficients& coefficients);

/// Alternating sum of ranks.
long long euler_characteristic(const GradedGroup& g);

/// Tensor with Q: keep ranks, drop torsion.
GradedGroup rationalize(const GradedGroup& g);

/// Converts integral homology to the given coefficients by the universal
/// coefficient theorem. Groups already over `coefficients` pass through;
/// converting away from a field is rejected.
GradedGroup change_coefficients(const GradedGroup& g, const Coefficients& coefficients);

/// Reduced H_0: rank lowered by one (H_0 of a nonempty space has rank >= 1).
FinAbGroup reduced_at(const GradedGroup& g, int degree);

/// Reduced homology equals that of S^n over the coefficients. Throws for n < 0.
bool is_homology_sphere(const GradedGroup& g, int n, const Coefficients& coefficients);

/// Reduced homology vanishes over the coefficients. Throws for p < 0.
bool is_homology_ball(const GradedGroup& g, int p, const Coefficients& coefficients);

struct ImplicationCheck {
  bool holds = true;
  std::string violation;  // empty when holds
};

/// If `ball` is a homology p-ball then `boundary` must be a homology
/// (p-1)-sphere over the same coefficients.
ImplicationCheck boundary_sphere_consistency(const GradedGroup& ball, int p,
                                             const GradedGroup& boundary,
                                             const Coefficients& coefficients);

/// H_*(S^n) over the coefficients (n >= 0).
GradedGroup sphere_homology(int n, const Coefficients& coefficients = Coefficients::integers());

/// Minimal CW model of a (2k+1)-dimensional lens space with fundamental
/// group Z/m: one cell per degree, d_{2i} = (m), d_{2i+1} = (0).
ChainComplex lens_chain_complex(const Integer& m, int k);

}  // namespace sgmtopo
