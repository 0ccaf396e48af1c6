#include "sgmtopo/abelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sgmtopo/errors.hpp"

namespace sgmtopo {

namespace {

// Turns an arbitrary list of positive integers into a divisibility chain
// with the same direct sum, by repeated (gcd, lcm) replacement. Ones are
// dropped.
std::vector<Integer> to_invariant_factors(std::vector<Integer> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == 1) break;
      Integer g = gcd(values[i], values[j]);
      if (g == values[i]) continue;
      values[j] = values[i] / g * values[j];
      values[i] = g;
    }
  }
  std::erase_if(values, [](const Integer& d) { return d == 1; });
  return values;
}

}  // namespace

FinAbGroup FinAbGroup::canonicalize(std::size_t rank, std::vector<Integer> torsion) {
  for (const auto& d : torsion) {
    if (d < 2) throw InvalidInput("torsion coefficient must be >= 2, got " + sgmtopo::to_string(d));
  }
  FinAbGroup g;
  g.rank_ = rank;
  g.factors_ = to_invariant_factors(std::move(torsion));
  return g;
}

FinAbGroup FinAbGroup::from_diagonal(std::size_t extra_rank, const std::vector<Integer>& diag) {
  std::vector<Integer> torsion;
  std::size_t rank = extra_rank;
  for (const auto& d : diag) {
    if (d == 0) {
      ++rank;
    } else if (abs(d) != 1) {
      torsion.push_back(abs(d));
    }
  }
  return canonicalize(rank, std::move(torsion));
}

FinAbGroup FinAbGroup::cyclic(const Integer& m) {
  if (m < 0) throw InvalidInput("cyclic group order must be non-negative");
  if (m == 0) return free(1);
  if (m == 1) return {};
  return canonicalize(0, {m});
}

FinAbGroup FinAbGroup::free(std::size_t rank) {
  FinAbGroup g;
  g.rank_ = rank;
  return g;
}

Integer FinAbGroup::generator_order(std::size_t i) const {
  if (i < factors_.size()) return factors_[i];
  if (i < generator_count()) return 0;
  throw InvalidInput("generator index out of range");
}

FinAbGroup FinAbGroup::torsion_subgroup() const {
  FinAbGroup g;
  g.factors_ = factors_;
  return g;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z";
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

bool operator<(const FinAbGroup& a, const FinAbGroup& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.factors_.size() != b.factors_.size()) return a.factors_.size() < b.factors_.size();
  return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                      b.factors_.end());
}

std::optional<Integer> order(const FinAbGroup& g) {
  if (!g.is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : g.invariant_factors()) n *= d;
  return n;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> torsion = a.invariant_factors();
  torsion.insert(torsion.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FinAbGroup::canonicalize(a.rank() + b.rank(), std::move(torsion));
}

PrimaryDecomposition primary_decomposition(const FinAbGroup& g) {
  if (!g.is_finite()) throw InvalidInput("primary decomposition needs a finite group");
  PrimaryDecomposition parts;
  for (const auto& d : g.invariant_factors()) {
    for (const auto& [p, e] : factorize(d)) parts[p].push_back(e);
  }
  for (auto& [p, exps] : parts) std::sort(exps.begin(), exps.end());
  return parts;
}

FinAbGroup from_primary_decomposition(const PrimaryDecomposition& parts) {
  std::vector<Integer> torsion;
  for (const auto& [p, exps] : parts) {
    for (unsigned e : exps) {
      if (e == 0) continue;
      Integer q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
      torsion.push_back(q);
    }
  }
  return FinAbGroup::canonicalize(0, std::move(torsion));
}

namespace {

// Halves every exponent multiplicity; nullopt if some multiplicity is odd.
std::optional<PrimaryDecomposition> halve(const PrimaryDecomposition& parts) {
  PrimaryDecomposition half;
  for (const auto& [p, exps] : parts) {
    std::map<unsigned, std::size_t> mult;
    for (unsigned e : exps) ++mult[e];
    for (const auto& [e, count] : mult) {
      if (count % 2 != 0) return std::nullopt;
      half[p].insert(half[p].end(), count / 2, e);
    }
  }
  return half;
}

}  // namespace

std::optional<FinAbGroup> is_double(const FinAbGroup& g) {
  auto half = halve(primary_decomposition(g));
  if (!half) return std::nullopt;
  return from_primary_decomposition(*half);
}

std::string to_string(WallShape shape) {
  switch (shape) {
    case WallShape::Double:
      return "DOUBLE";
    case WallShape::DoublePlusZ2:
      return "DOUBLE_PLUS_Z2";
    case WallShape::None:
      return "NONE";
  }
  return "NONE";
}

WallAlternatives wall_alternatives(const FinAbGroup& t) {
  if (!t.is_finite()) throw InvalidInput("wall alternatives need a finite group");
  WallAlternatives out;
  auto parts = primary_decomposition(t);
  if (auto half = halve(parts)) {
    out.shapes.insert(WallShape::Double);
    out.half = from_primary_decomposition(*half);
  }
  auto two = parts.find(Integer(2));
  if (two != parts.end()) {
    auto& exps = two->second;
    auto it = std::find(exps.begin(), exps.end(), 1u);
    if (it != exps.end()) {
      exps.erase(it);
      if (auto half = halve(parts)) {
        out.shapes.insert(WallShape::DoublePlusZ2);
        out.half = from_primary_decomposition(*half);
      }
    }
  }
  if (out.shapes.empty()) out.shapes.insert(WallShape::None);
  return out;
}

bool littlewood_richardson_nonzero(const std::vector<unsigned>& outer,
                                   const std::vector<unsigned>& inner,
                                   const std::vector<unsigned>& content) {
  auto size = [](const std::vector<unsigned>& v) {
    return std::accumulate(v.begin(), v.end(), 0u);
  };
  if (size(outer) != size(inner) + size(content)) return false;
  if (inner.size() > outer.size()) return false;
  auto inner_at = [&](std::size_t r) -> unsigned { return r < inner.size() ? inner[r] : 0; };
  for (std::size_t r = 0; r < outer.size(); ++r)
    if (inner_at(r) > outer[r]) return false;

  // Cells of outer/inner in reverse reading order: rows top to bottom,
  // each row right to left.
  struct Cell {
    std::size_t row, col;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < outer.size(); ++r)
    for (std::size_t c = outer[r]; c-- > inner_at(r);) cells.push_back({r, c});

  std::vector<std::vector<unsigned>> fill(outer.size());
  for (std::size_t r = 0; r < outer.size(); ++r) fill[r].assign(outer[r], 0);
  std::vector<unsigned> used(content.size() + 1, 0);

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == cells.size()) return true;
    auto [r, c] = cells[idx];
    unsigned hi = static_cast<unsigned>(content.size());
    if (c + 1 < outer[r]) hi = std::min(hi, fill[r][c + 1]);
    unsigned lo = 1;
    if (r > 0 && c >= inner_at(r - 1)) lo = fill[r - 1][c] + 1;
    for (unsigned v = lo; v <= hi; ++v) {
      if (used[v] + 1 > content[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      fill[r][c] = v;
      if (place(idx + 1)) return true;
      --used[v];
    }
    fill[r][c] = 0;
    return false;
  };
  return place(0);
}

namespace {

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<unsigned> descending(std::vector<unsigned> exps) {
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

}  // namespace

std::vector<FinAbGroup> enumerate_extensions(const FinAbGroup& sub, const FinAbGroup& quotient,
                                             long bound) {
  if (!sub.is_finite() || !quotient.is_finite())
    throw InvalidInput("extension enumeration needs finite groups");
  Integer total = *order(sub) * *order(quotient);
  if (total > bound) {
    throw ResourceLimitExceeded("extension enumeration: |H|*|Q| = " + sgmtopo::to_string(total) +
                                " exceeds bound " + std::to_string(bound));
  }
  auto sub_parts = primary_decomposition(sub);
  auto quot_parts = primary_decomposition(quotient);
  std::set<Integer> primes;
  for (const auto& [p, e] : sub_parts) primes.insert(p);
  for (const auto& [p, e] : quot_parts) primes.insert(p);

  // Per prime: every p-group type lambda with c^lambda_{mu,nu} != 0.
  std::vector<std::pair<Integer, std::vector<std::vector<unsigned>>>> choices;
  for (const auto& p : primes) {
    auto mu = descending(sub_parts.count(p) ? sub_parts.at(p) : std::vector<unsigned>{});
    auto nu = descending(quot_parts.count(p) ? quot_parts.at(p) : std::vector<unsigned>{});
    unsigned n = std::accumulate(mu.begin(), mu.end(), 0u) + std::accumulate(nu.begin(), nu.end(), 0u);
    std::vector<std::vector<unsigned>> fits;
    for (auto& lambda : partitions_of(n))
      if (littlewood_richardson_nonzero(lambda, mu, nu)) fits.push_back(std::move(lambda));
    choices.emplace_back(p, std::move(fits));
  }

  std::set<FinAbGroup> found;
  PrimaryDecomposition current;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == choices.size()) {
      found.insert(from_primary_decomposition(current));
      return;
    }
    const auto& [p, lambdas] = choices[idx];
    for (const auto& lambda : lambdas) {
      current[p] = lambda;
      rec(idx + 1);
    }
    current.erase(p);
  };
  rec(0);
  return {found.begin(), found.end()};
}

std::vector<Integer> reduce_element(const FinAbGroup& g, std::vector<Integer> element) {
  if (element.size() != g.generator_count()) throw InvalidInput("element has wrong coordinate count");
  for (std::size_t i = 0; i < g.torsion_generator_count(); ++i)
    element[i] = mod_floor(element[i], g.invariant_factors()[i]);
  return element;
}

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count()) {
    throw InvalidInput("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                       std::to_string(matrix_.cols()) + ", expected " +
                       std::to_string(target_.generator_count()) + "x" +
                       std::to_string(source_.generator_count()));
  }
  const std::size_t torsion_rows = target_.torsion_generator_count();
  for (std::size_t i = 0; i < torsion_rows; ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      matrix_(i, j) = mod_floor(matrix_(i, j), target_.invariant_factors()[i]);

  for (std::size_t j = 0; j < source_.torsion_generator_count(); ++j) {
    const Integer& ord = source_.invariant_factors()[j];
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      bool killed = i < torsion_rows
                        ? mod_floor(ord * matrix_(i, j), target_.invariant_factors()[i]) == 0
                        : matrix_(i, j) == 0;
      if (!killed) {
        throw InvalidInput("homomorphism not well defined: generator " + std::to_string(j) +
                           " of order " + sgmtopo::to_string(ord) +
                           " has an image of larger order");
      }
    }
  }
}

GroupHom GroupHom::zero(const FinAbGroup& source, const FinAbGroup& target) {
  return {source, target, IntMatrix(target.generator_count(), source.generator_count())};
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  return {g, g, IntMatrix::identity(g.generator_count())};
}

std::vector<Integer> GroupHom::apply(std::span<const Integer> element) const {
  return reduce_element(target_, matrix_ * element);
}

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (!(first.target() == second.source())) throw InvalidInput("compose: groups do not match");
  return {first.source(), second.target(), second.matrix() * first.matrix()};
}

}  // namespace sgmtopo
