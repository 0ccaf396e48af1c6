#pragma once

// The long exact sequence linking H_*(M), H_*(W_f) and H^*(W_f) for a
// special generic map f : M^n -> R^p with Stein factorization W_f, used as
// an order-level constraint engine.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgmtopo/exact_sequence.hpp"
#include "sgmtopo/homology.hpp"

namespace sgmtopo {

/// Source dimension n, target dimension p (1 <= p < n), the homology of the
/// Stein factorization and optionally of M.
class SteinInstance {
 public:
  /// Validates 1 <= p < n and that W_f has no homology above degree p.
  SteinInstance(int n, int p, GradedGroup wf_homology,
                std::optional<GradedGroup> m_homology = std::nullopt, bool orientable = true,
                Coefficients coefficients = Coefficients::integers());

  int n() const { return n_; }
  int p() const { return p_; }
  const GradedGroup& wf_homology() const { return wf_; }
  const std::optional<GradedGroup>& m_homology() const { return m_; }
  bool orientable() const { return orientable_; }
  const Coefficients& coefficients() const { return coefficients_; }

 private:
  int n_;
  int p_;
  GradedGroup wf_;
  std::optional<GradedGroup> m_;
  bool orientable_;
  Coefficients coefficients_;
};

struct LowDegreeTransfer {
  /// (q, H_q(M)) for q = 0..n-p, forced equal to H_q(W_f).
  std::vector<std::pair<int, FinAbGroup>> forced;
  std::vector<std::string> violations;
};

/// H_q(M) = H_q(W_f) for q <= n - p, over the instance's coefficients.
LowDegreeTransfer low_degree_transfer(const SteinInstance& inst);

/// If W_f is a homology p-ball then M is a homology n-sphere: returns the
/// sphere-shaped homology M must have. Throws InvalidInput when W_f is not a
/// ball or M is not flagged orientable.
GradedGroup ball_to_sphere(const SteinInstance& inst);

/// If M is a homology n-sphere then W_f must be a homology p-ball. Holds
/// vacuously when M is not a sphere, M's homology is missing, or M is not
/// flagged orientable.
ImplicationCheck sphere_to_ball_check(const SteinInstance& inst);

/// Signed-index terms of the integral sequence around A_0 = H_k(M) for
/// n = 2k+1 >= 5:
///   A_{3s+1} = A_{-(3s+1)} = H_{k-s}(W_f)       (zero once k-s < 2)
///   A_{3s+2} = A_{-(3s+2)} = H_{k+1+s}(W_f)     (zero once k+1+s > n-2)
///   A_{3s} = H_{k-s}(M), A_{-3s} = H_{k+s}(M)   (s > 0; zero once k-s < 2)
/// M terms come from the instance when present; otherwise a term between
/// two zero terms is zero by exactness, and anything else stays unknown.
/// Throws InvalidInput for even n, n < 5, n != 2k+1, infinite terms, or M
/// data violating H_i(M) = H_{n-i-1}(M) in order.
SequenceSkeleton prop42_sequence(const SteinInstance& inst, int k);

struct RealizationParameters {
  int k;
  int p;
  int n;
  /// Embedding dimension of the punctured lens space (4 when m is odd,
  /// 5 otherwise) and the suspension count.
  int a;
  int r;
  std::string w_description;
  /// Set when smaller k is an open case (k = 3 with even order).
  std::optional<std::string> open_question;
};

/// Smallest (k, p, n) realizing |H_k(M)| = m^2 through the regular
/// neighbourhood of an r-fold suspended punctured lens space in R^(a+r).
RealizationParameters realization_parameters(const Integer& m);

/// W_f for the realization: H_0 = Z, H_k = Z/m, nothing else, with the
/// matching n and p.
SteinInstance realization_instance(const Integer& m);

/// Candidate isomorphism types for H_k(M): extensions of Z/m by Z/m.
std::vector<FinAbGroup> realization_candidates(const Integer& m,
                                               long bound = kDefaultEnumerationBound);

}  // namespace sgmtopo
