#pragma once

// Obstructions to special generic maps M^n -> R^p and dimension-set
// verdicts for lens spaces and linear S^3-bundles over S^4.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgmtopo/homology.hpp"

namespace sgmtopo {

/// L_m(l_1, ..., l_{k+1}): m > 1, every l_i coprime to m.
class LensSpec {
 public:
  LensSpec(Integer m, std::vector<Integer> l);

  const Integer& m() const { return m_; }
  const std::vector<Integer>& l() const { return l_; }
  int k() const { return static_cast<int>(l_.size()) - 1; }
  int dimension() const { return 2 * k() + 1; }
  std::string name() const;

 private:
  Integer m_;
  std::vector<Integer> l_;
};

/// Total space M_{m,n} of the S^3-bundle over S^4 with invariants (m, n),
/// n != 0.
class BundleSpec {
 public:
  BundleSpec(Integer m, Integer n);

  const Integer& m() const { return m_; }
  const Integer& n() const { return n_; }
  std::string name() const;

 private:
  Integer m_;
  Integer n_;
};

enum class Status { Exists, Obstructed, Unknown };

enum class Reason {
  SquareObstruction,
  EulerParity,
  Reeb,
  EliashbergSp,
  Emss,
  CatalogFact,
  None,
};

std::string to_string(Status status);
std::string to_string(Reason reason);
Status parse_status(const std::string& text);
Reason parse_reason(const std::string& text);

struct TargetStatus {
  Status status = Status::Unknown;
  Reason reason = Reason::None;
  std::string note;
};

/// Status for every target dimension p in 1..n.
struct DimensionSetVerdict {
  int dimension = 0;
  std::map<int, TargetStatus> statuses;
  /// The set S(M) when every p is decided.
  std::optional<std::set<int>> summary;

  /// Recomputes `summary` from `statuses`.
  void finalize();
};

/// r with r^2 = n. Throws InvalidInput for n <= 0.
std::optional<Integer> perfect_square(const Integer& n);

enum class SquareOutcome { AppliesObstructed, AppliesPasses, NotApplicable };

std::string to_string(SquareOutcome outcome);

struct SquareVerdict {
  SquareOutcome outcome = SquareOutcome::NotApplicable;
  /// Why the test does not apply, or the order that was tested.
  std::string reason;
  std::optional<Integer> middle_order;
};

/// For a rational homology n-sphere with n = 2k+1 >= 5: no special generic
/// map into R^p, 1 <= p < n, unless |H_k(M; Z)| is a perfect square.
/// Throws InconsistencyError when only H_k keeps M from being a rational
/// homology sphere (impossible for a closed orientable manifold).
SquareVerdict square_obstruction(const GradedGroup& m_homology, int n, bool orientable);

struct ParityVerdict {
  long long euler_characteristic = 0;
  /// p in 1..n-1 when chi is odd; empty otherwise.
  std::vector<int> obstructed;
};

ParityVerdict euler_parity_obstruction(const GradedGroup& m_homology, int n);

GradedGroup lens_homology(const LensSpec& spec);

/// Stable parallelizability of L_m(l) for m an odd prime and 1 <= l_i <= m-1:
/// k < m and sum_i l_i^{2j} = 0 mod m for j = 1..floor(k/2). nullopt when
/// those hypotheses fail.
std::optional<bool> emss_stably_parallelizable(const LensSpec& spec);

/// `stably_parallelizable`, when given, decides p = 2k+1 where the prime
/// criterion does not apply.
DimensionSetVerdict lens_dimension_set(const LensSpec& spec,
                                       std::optional<bool> stably_parallelizable = std::nullopt);

GradedGroup bundle_homology(const BundleSpec& spec);

DimensionSetVerdict bundle_dimension_set(const BundleSpec& spec);

/// Verdict from homology alone: square obstruction, Euler parity and Reeb.
/// p = n stays Unknown.
DimensionSetVerdict classify_homology(const GradedGroup& m_homology, int n, bool orientable);

struct KnownFact {
  std::string description;
  std::string provenance;
  std::map<int, Status> statuses;
};

struct CatalogEntry {
  std::string name;
  GradedGroup homology;
  int dimension = 0;
  bool orientable = true;
  std::vector<KnownFact> facts;
  std::optional<LensSpec> lens;
  std::optional<BundleSpec> bundle;
};

/// Accepts "S^n", "RP5", "L_m(l1,...,lk)" / "Lm(l1,...)" and
/// "M_{m,n}" / "M(m,n)". Throws InvalidInput for anything else.
CatalogEntry catalog_lookup(const std::string& name);

/// Full verdict for a catalog entry, with recorded facts applied last.
/// Throws InconsistencyError if a fact contradicts a derived status.
DimensionSetVerdict classify(const CatalogEntry& entry);

}  // namespace sgmtopo
