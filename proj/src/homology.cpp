#include "sgmtopo/homology.hpp"

#include <algorithm>
#include <sstream>

#include "sgmtopo/errors.hpp"
#include "sgmtopo/zlinalg.hpp"

namespace sgmtopo {

Coefficients Coefficients::prime_field(const Integer& p) {
  if (!is_prime(p)) throw InvalidInput("F_p needs a prime p, got " + sgmtopo::to_string(p));
  return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) return prime_field(parse_integer(text.substr(3)));
  throw InvalidInput("unknown coefficients '" + text + "' (expected Z, Q or Fp:P)");
}

std::string Coefficients::to_string() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "Fp:" + sgmtopo::to_string(characteristic_);
  }
  return "Z";
}

ChainComplex::ChainComplex(std::vector<std::size_t> cell_counts, std::map<int, IntMatrix> boundaries)
    : cells_(std::move(cell_counts)), boundaries_(std::move(boundaries)) {
  if (cells_.empty()) throw InvalidInput("chain complex needs cell counts for degrees 0..n");
  const int n = max_degree();
  for (const auto& [degree, m] : boundaries_) {
    if (degree < 1 || degree > n)
      throw InvalidInput("boundary degree " + std::to_string(degree) + " outside 1.." +
                         std::to_string(n));
    if (m.rows() != cells(degree - 1) || m.cols() != cells(degree)) {
      throw InvalidInput("boundary d_" + std::to_string(degree) + " has shape " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(cells(degree - 1)) + "x" +
                         std::to_string(cells(degree)));
    }
  }
  for (int degree = 1; degree < n; ++degree) {
    if (!(boundary(degree) * boundary(degree + 1)).is_zero())
      throw InvalidInput("boundary maps violate d_" + std::to_string(degree) + " d_" +
                         std::to_string(degree + 1) + " = 0");
  }
}

std::size_t ChainComplex::cells(int degree) const {
  if (degree < 0 || degree > max_degree()) return 0;
  return cells_[static_cast<std::size_t>(degree)];
}

IntMatrix ChainComplex::boundary(int degree) const {
  auto it = boundaries_.find(degree);
  if (it != boundaries_.end()) return it->second;
  return IntMatrix(cells(degree - 1), cells(degree));
}

GradedGroup::GradedGroup(int top_degree, std::map<int, FinAbGroup> groups,
                         Coefficients coefficients)
    : top_degree_(top_degree), coefficients_(std::move(coefficients)) {
  if (top_degree_ < 0) throw InvalidInput("graded group top degree must be >= 0");
  for (auto& [degree, group] : groups) {
    if (degree < 0 || degree > top_degree_) {
      if (group.is_trivial()) continue;
      throw InvalidInput("nontrivial group in degree " + std::to_string(degree) +
                         " outside 0.." + std::to_string(top_degree_));
    }
    if (coefficients_.is_field() && !group.invariant_factors().empty())
      throw InvalidInput("homology over a field cannot carry torsion");
    if (!group.is_trivial()) groups_.emplace(degree, std::move(group));
  }
}

GradedGroup GradedGroup::from_list(std::vector<FinAbGroup> groups, Coefficients coefficients) {
  std::map<int, FinAbGroup> by_degree;
  for (std::size_t d = 0; d < groups.size(); ++d) by_degree.emplace(static_cast<int>(d), groups[d]);
  int top = groups.empty() ? 0 : static_cast<int>(groups.size()) - 1;
  return {top, std::move(by_degree), std::move(coefficients)};
}

FinAbGroup GradedGroup::at(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? FinAbGroup{} : it->second;
}

std::string GradedGroup::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int d = 0; d <= top_degree_; ++d) {
    FinAbGroup g = at(d);
    std::string text = g.to_string();
    if (coefficients_.is_field() && !g.is_trivial()) {
      std::string ring = coefficients_.kind() == Coefficients::Kind::Rationals
                             ? "Q"
                             : "F" + sgmtopo::to_string(coefficients_.characteristic());
      text = g.rank() == 1 ? ring : ring + "^" + std::to_string(g.rank());
    }
    os << (d ? ", " : "") << text;
  }
  os << "] over " << coefficients_.to_string();
  return os.str();
}

GradedGroup homology(const ChainComplex& complex, const Coefficients& coefficients) {
  const int n = complex.max_degree();
  auto rank_of = [&](const IntMatrix& m) -> std::size_t {
    switch (coefficients.kind()) {
      case Coefficients::Kind::Integers:
        return image_rank(m);
      case Coefficients::Kind::Rationals:
        return rank_over_rationals(m);
      case Coefficients::Kind::PrimeField:
        return rank_mod_prime(m, coefficients.characteristic());
    }
    return 0;
  };
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 2, 0);
  for (int d = 1; d <= n; ++d) ranks[static_cast<std::size_t>(d)] = rank_of(complex.boundary(d));

  std::map<int, FinAbGroup> groups;
  for (int d = 0; d <= n; ++d) {
    std::size_t cycles = complex.cells(d) - ranks[static_cast<std::size_t>(d)];
    std::size_t boundaries = ranks[static_cast<std::size_t>(d) + 1];
    std::vector<Integer> torsion;
    if (coefficients.kind() == Coefficients::Kind::Integers && d < n) {
      for (const auto& s : smith_normal_form(complex.boundary(d + 1)).diagonal())
        if (s > 1) torsion.push_back(s);
    }
    groups.emplace(d, FinAbGroup::canonicalize(cycles - boundaries, std::move(torsion)));
  }
  return {n, std::move(groups), coefficients};
}

long long euler_characteristic(const GradedGroup& g) {
  long long chi = 0;
  for (const auto& [d, group] : g.groups())
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(group.rank());
  return chi;
}

GradedGroup rationalize(const GradedGroup& g) {
  return change_coefficients(g, Coefficients::rationals());
}

GradedGroup change_coefficients(const GradedGroup& g, const Coefficients& coefficients) {
  if (g.coefficients() == coefficients) return g;
  if (g.coefficients().is_field())
    throw InvalidInput("cannot change coefficients from " + g.coefficients().to_string() + " to " +
                       coefficients.to_string());
  std::map<int, FinAbGroup> out;
  for (int d = 0; d <= g.top_degree(); ++d) {
    std::size_t rank = g.at(d).rank();
    if (coefficients.kind() == Coefficients::Kind::PrimeField) {
      const Integer& p = coefficients.characteristic();
      auto divisible = [&](const FinAbGroup& h) {
        return static_cast<std::size_t>(std::count_if(
            h.invariant_factors().begin(), h.invariant_factors().end(),
            [&](const Integer& x) { return mod_floor(x, p) == 0; }));
      };
      // Tensor term from degree d, Tor term from degree d-1.
      rank += divisible(g.at(d)) + divisible(g.at(d - 1));
    }
    out.emplace(d, FinAbGroup::free(rank));
  }
  return {g.top_degree(), std::move(out), coefficients};
}

FinAbGroup reduced_at(const GradedGroup& g, int degree) {
  FinAbGroup h = g.at(degree);
  if (degree != 0 || h.rank() == 0) return h;
  return FinAbGroup::canonicalize(h.rank() - 1, h.invariant_factors());
}

bool is_homology_sphere(const GradedGroup& g, int n, const Coefficients& coefficients) {
  if (n < 0) throw InvalidInput("sphere dimension must be >= 0");
  GradedGroup h = change_coefficients(g, coefficients);
  for (int d = 0; d <= std::max(n, h.top_degree()); ++d) {
    FinAbGroup expected = d == n ? FinAbGroup::free(1) : FinAbGroup{};
    if (!(reduced_at(h, d) == expected)) return false;
  }
  return true;
}

bool is_homology_ball(const GradedGroup& g, int p, const Coefficients& coefficients) {
  if (p < 0) throw InvalidInput("ball dimension must be >= 0");
  GradedGroup h = change_coefficients(g, coefficients);
  for (int d = 0; d <= h.top_degree(); ++d)
    if (!reduced_at(h, d).is_trivial()) return false;
  return true;
}

ImplicationCheck boundary_sphere_consistency(const GradedGroup& ball, int p,
                                             const GradedGroup& boundary,
                                             const Coefficients& coefficients) {
  if (p < 1 || !is_homology_ball(ball, p, coefficients)) return {};
  if (is_homology_sphere(boundary, p - 1, coefficients)) return {};
  return {false, "homology " + std::to_string(p) + "-ball over " + coefficients.to_string() +
                     " whose boundary " + boundary.to_string() + " is not a homology " +
                     std::to_string(p - 1) + "-sphere"};
}

GradedGroup sphere_homology(int n, const Coefficients& coefficients) {
  if (n < 0) throw InvalidInput("sphere dimension must be >= 0");
  std::map<int, FinAbGroup> groups;
  if (n == 0) {
    groups.emplace(0, FinAbGroup::free(2));
  } else {
    groups.emplace(0, FinAbGroup::free(1));
    groups.emplace(n, FinAbGroup::free(1));
  }
  return {n, std::move(groups), coefficients};
}

ChainComplex lens_chain_complex(const Integer& m, int k) {
  if (m < 1) throw InvalidInput("lens space needs m >= 1");
  if (k < 0) throw InvalidInput("lens space needs k >= 0");
  const int n = 2 * k + 1;
  std::map<int, IntMatrix> boundaries;
  for (int d = 1; d <= n; ++d) boundaries.emplace(d, IntMatrix{{d % 2 == 0 ? m : Integer(0)}});
  return {std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 1), std::move(boundaries)};
}

}  // namespace sgmtopo
