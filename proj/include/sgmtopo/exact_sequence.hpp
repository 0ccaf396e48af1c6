#pragma once

// Finite exact sequences of finite abelian groups A_lo -> ... -> A_hi with
// signed indices. Terms outside [lo, hi] are zero; index 0 is A_0.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sgmtopo/abelian.hpp"

namespace sgmtopo {

class ExactSequence {
 public:
  /// Terms missing from `terms` are trivial, maps missing from `maps` are
  /// zero. maps[i] goes A_i -> A_{i+1} for lo <= i < hi. Validates
  /// finiteness and that each map's source and target match the terms.
  /// Exactness is not checked here; see verify_exactness.
  ExactSequence(int lo, int hi, std::map<int, FinAbGroup> terms, std::map<int, GroupHom> maps);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  /// Trivial outside [lo, hi].
  FinAbGroup term(int index) const;
  /// alpha_index : A_index -> A_{index+1}; the zero map outside [lo, hi-1].
  GroupHom map(int index) const;
  Integer term_order(int index) const { return *order(term(index)); }

  /// Copy with alpha_index replaced.
  ExactSequence with_map(int index, GroupHom replacement) const;

 private:
  int lo_;
  int hi_;
  std::map<int, FinAbGroup> terms_;
  std::map<int, GroupHom> maps_;
};

enum class ExactnessMethod {
  /// Lattice computations on the lifted presentations (Hermite forms).
  Presentation,
  /// Explicit enumeration of all elements; every |A_i| must be within bound.
  Enumeration,
};

struct ExactnessReport {
  bool exact = true;
  /// First index where ker(alpha_i) != im(alpha_{i-1}).
  std::optional<int> failed_index;
  Integer kernel_order = 0;
  Integer image_order = 0;

  std::string to_string() const;
};

/// Checks ker(alpha_i) = im(alpha_{i-1}) at every index lo..hi.
ExactnessReport verify_exactness(const ExactSequence& seq,
                                 ExactnessMethod method = ExactnessMethod::Presentation,
                                 long bound = kDefaultEnumerationBound);

/// |ker alpha_i| and |im alpha_{i-1}| at one index, by the chosen method.
std::pair<Integer, Integer> kernel_and_image_orders(const ExactSequence& seq, int index,
                                                    ExactnessMethod method,
                                                    long bound = kDefaultEnumerationBound);

struct AlternatingProducts {
  Integer odd;
  Integer even;
};

/// Products of |A_i| over odd and over even indices. Throws
/// InconsistencyError unless the sequence is exact.
AlternatingProducts alternating_order_identity(const ExactSequence& seq);

/// |A_0| = k^2 with k = x / y, x = prod_{j>=0} |A_{2j+1}|,
/// y = prod_{j>=1} |A_{2j}|.
struct SquareOrderCertificate {
  Integer k;
  Integer x;
  Integer y;
  /// |A_0| when known (always for full sequences; forced value k^2 for
  /// skeletons without A_0).
  Integer a0;
};

/// Requires exactness (InconsistencyError otherwise) and |A_{-i}| = |A_i|
/// for every i (InvalidInput otherwise).
SquareOrderCertificate lemma_square_order(const ExactSequence& seq);

/// Term-only view of a sequence whose exactness is known from the
/// surrounding theory. A_0 may be unknown; every other term must be known.
struct SequenceSkeleton {
  int lo = 0;
  int hi = 0;
  std::map<int, std::optional<FinAbGroup>> terms;

  std::optional<FinAbGroup> term(int index) const;
  bool symmetric_orders() const;
};

/// Order-level form of the square lemma. Throws InvalidInput if a term
/// other than A_0 is unknown or the orders are not symmetric, and
/// InconsistencyError if a known A_0 disagrees with the forced value.
SquareOrderCertificate lemma_square_order(const SequenceSkeleton& skeleton);

/// Random exact sequence A_0 -> ... -> A_{length+1} built from random
/// (generally non-split) extensions 0 -> I_i -> A_i -> I_{i+1} -> 0 with
/// |A_i| <= order_bound. Deterministic in the seed.
ExactSequence splice_random(std::uint64_t seed, int length, long order_bound);

/// Like splice_random but indexed -reach..reach with |A_{-i}| = |A_i|.
/// Only the orders are mirrored; group structures are drawn independently.
ExactSequence splice_symmetric(std::uint64_t seed, int reach, long order_bound);

}  // namespace sgmtopo
