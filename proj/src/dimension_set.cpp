#include "sgmtopo/dimension_set.hpp"

#include <regex>
#include <sstream>

#include "sgmtopo/errors.hpp"

namespace sgmtopo {

LensSpec::LensSpec(Integer m, std::vector<Integer> l) : m_(std::move(m)), l_(std::move(l)) {
  if (m_ <= 1) throw InvalidInput("lens space needs m > 1");
  if (l_.empty()) throw InvalidInput("lens space needs at least one weight l_i");
  for (const auto& li : l_) {
    if (gcd(li, m_) != 1)
      throw InvalidInput("lens weight " + to_string(li) + " is not coprime to m = " + to_string(m_));
  }
}

std::string LensSpec::name() const {
  std::ostringstream os;
  os << "L_" << m_ << '(';
  for (std::size_t i = 0; i < l_.size(); ++i) os << (i ? "," : "") << l_[i];
  os << ')';
  return os.str();
}

BundleSpec::BundleSpec(Integer m, Integer n) : m_(std::move(m)), n_(std::move(n)) {
  if (n_ == 0) throw InvalidInput("bundle M_{m,n} needs n != 0 (rational homology sphere)");
}

std::string BundleSpec::name() const {
  return "M_{" + to_string(m_) + "," + to_string(n_) + "}";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Exists:
      return "Exists";
    case Status::Obstructed:
      return "Obstructed";
    case Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::SquareObstruction:
      return "SQUARE_OBSTRUCTION";
    case Reason::EulerParity:
      return "EULER_PARITY";
    case Reason::Reeb:
      return "REEB";
    case Reason::EliashbergSp:
      return "ELIASHBERG_SP";
    case Reason::Emss:
      return "EMSS";
    case Reason::CatalogFact:
      return "CATALOG_FACT";
    case Reason::None:
      return "NONE";
  }
  return "NONE";
}

Status parse_status(const std::string& text) {
  for (auto s : {Status::Exists, Status::Obstructed, Status::Unknown})
    if (to_string(s) == text) return s;
  throw InvalidInput("unknown status '" + text + "'");
}

Reason parse_reason(const std::string& text) {
  for (auto r : {Reason::SquareObstruction, Reason::EulerParity, Reason::Reeb, Reason::EliashbergSp,
                 Reason::Emss, Reason::CatalogFact, Reason::None})
    if (to_string(r) == text) return r;
  throw InvalidInput("unknown reason code '" + text + "'");
}

void DimensionSetVerdict::finalize() {
  std::set<int> exists;
  for (const auto& [p, st] : statuses) {
    if (st.status == Status::Unknown) {
      summary.reset();
      return;
    }
    if (st.status == Status::Exists) exists.insert(p);
  }
  summary = std::move(exists);
}

std::optional<Integer> perfect_square(const Integer& n) {
  if (n <= 0) throw InvalidInput("perfect_square needs n >= 1");
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::string to_string(SquareOutcome outcome) {
  switch (outcome) {
    case SquareOutcome::AppliesObstructed:
      return "APPLIES_OBSTRUCTED";
    case SquareOutcome::AppliesPasses:
      return "APPLIES_PASSES";
    case SquareOutcome::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

SquareVerdict square_obstruction(const GradedGroup& m_homology, int n, bool orientable) {
  if (m_homology.coefficients() != Coefficients::integers())
    throw InvalidInput("square obstruction needs integral homology");
  if (n % 2 == 0) return {SquareOutcome::NotApplicable, "n is even", std::nullopt};
  if (n < 5) return {SquareOutcome::NotApplicable, "n < 5", std::nullopt};
  if (!orientable) return {SquareOutcome::NotApplicable, "M is not orientable", std::nullopt};
  const int k = (n - 1) / 2;
  const Coefficients q = Coefficients::rationals();
  FinAbGroup middle = m_homology.at(k);
  if (!is_homology_sphere(m_homology, n, q)) {
    auto groups = m_homology.groups();
    groups[k] = middle.torsion_subgroup();
    if (!middle.is_finite() &&
        is_homology_sphere(GradedGroup(m_homology.top_degree(), groups), n, q)) {
      throw InconsistencyError("H_" + std::to_string(k) +
                               " is infinite while every other degree is rationally trivial; "
                               "this cannot be the homology of a closed orientable manifold");
    }
    return {SquareOutcome::NotApplicable, "not a rational homology " + std::to_string(n) + "-sphere",
            std::nullopt};
  }
  Integer size = *order(middle);
  if (perfect_square(size)) {
    return {SquareOutcome::AppliesPasses,
            "|H_" + std::to_string(k) + "| = " + to_string(size) + " is a square", size};
  }
  return {SquareOutcome::AppliesObstructed,
          "|H_" + std::to_string(k) + "| = " + to_string(size) + " is not a square", size};
}

ParityVerdict euler_parity_obstruction(const GradedGroup& m_homology, int n) {
  ParityVerdict out;
  out.euler_characteristic = euler_characteristic(m_homology);
  if (out.euler_characteristic % 2 != 0)
    for (int p = 1; p < n; ++p) out.obstructed.push_back(p);
  return out;
}

GradedGroup lens_homology(const LensSpec& spec) {
  const int n = spec.dimension();
  std::map<int, FinAbGroup> groups{{0, FinAbGroup::free(1)}, {n, FinAbGroup::free(1)}};
  for (int i = 1; i < n; i += 2) groups[i] = FinAbGroup::cyclic(spec.m());
  return {n, std::move(groups)};
}

std::optional<bool> emss_stably_parallelizable(const LensSpec& spec) {
  const Integer& m = spec.m();
  if (m == 2 || !is_prime(m)) return std::nullopt;
  for (const auto& li : spec.l())
    if (li < 1 || li > m - 1) return std::nullopt;
  const int k = spec.k();
  if (Integer(k) >= m) return false;
  for (int j = 1; j <= k / 2; ++j) {
    Integer sum = 0;
    for (const auto& li : spec.l()) {
      Integer power;
      mpz_powm_ui(power.get_mpz_t(), li.get_mpz_t(), 2UL * static_cast<unsigned long>(j),
                  m.get_mpz_t());
      sum += power;
    }
    if (mod_floor(sum, m) != 0) return false;
  }
  return true;
}

DimensionSetVerdict classify_homology(const GradedGroup& m_homology, int n, bool orientable) {
  if (n < 1) throw InvalidInput("manifold dimension must be >= 1");
  DimensionSetVerdict verdict;
  verdict.dimension = n;
  const auto square = square_obstruction(m_homology, n, orientable);
  const auto parity = euler_parity_obstruction(m_homology, n);
  const bool sphere_like = is_homology_sphere(m_homology, n, Coefficients::integers());
  for (int p = 1; p <= n; ++p) {
    TargetStatus st;
    if (p < n && square.outcome == SquareOutcome::AppliesObstructed) {
      st = {Status::Obstructed, Reason::SquareObstruction, square.reason};
    } else if (p < n && !parity.obstructed.empty()) {
      st = {Status::Obstructed, Reason::EulerParity,
            "chi = " + std::to_string(parity.euler_characteristic) + " is odd"};
    } else if (p == 1 && p < n && !sphere_like) {
      st = {Status::Obstructed, Reason::Reeb, "reduced integral homology is not that of a sphere"};
    } else {
      st = {Status::Unknown, Reason::None, "no criterion applies"};
    }
    verdict.statuses.emplace(p, std::move(st));
  }
  verdict.finalize();
  return verdict;
}

DimensionSetVerdict lens_dimension_set(const LensSpec& spec,
                                       std::optional<bool> stably_parallelizable) {
  const int n = spec.dimension();
  auto verdict = classify_homology(lens_homology(spec), n, true);
  auto& top = verdict.statuses.at(n);
  if (auto emss = emss_stably_parallelizable(spec)) {
    if (stably_parallelizable && *stably_parallelizable != *emss)
      throw InvalidInput("supplied stable parallelizability contradicts the odd-prime criterion");
    top = {*emss ? Status::Exists : Status::Obstructed, Reason::Emss,
           *emss ? "stably parallelizable (power-sum criterion)"
                 : "not stably parallelizable (power-sum criterion)"};
  } else if (stably_parallelizable) {
    top = {*stably_parallelizable ? Status::Exists : Status::Obstructed, Reason::EliashbergSp,
           "stable parallelizability supplied by caller"};
  } else {
    top = {Status::Unknown, Reason::None, "stable parallelizability not decided"};
  }
  verdict.finalize();
  return verdict;
}

GradedGroup bundle_homology(const BundleSpec& spec) {
  std::map<int, FinAbGroup> groups{{0, FinAbGroup::free(1)},
                                   {3, FinAbGroup::cyclic(abs(spec.n()))},
                                   {7, FinAbGroup::free(1)}};
  return {7, std::move(groups)};
}

DimensionSetVerdict bundle_dimension_set(const BundleSpec& spec) {
  auto verdict = classify_homology(bundle_homology(spec), 7, true);
  const bool parallelizable = mod_floor(2 * spec.m(), abs(spec.n())) == 0;
  verdict.statuses.at(7) = {parallelizable ? Status::Exists : Status::Obstructed,
                            Reason::EliashbergSp,
                            "p1/2 = 2m = " + to_string(mod_floor(2 * spec.m(), abs(spec.n()))) +
                                " (mod " + to_string(abs(spec.n())) + ")"};
  verdict.finalize();
  return verdict;
}

namespace {

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_integer(item));
  }
  return out;
}

KnownFact all_targets(int n, Status status, std::string description, std::string provenance,
                      int last) {
  KnownFact fact{std::move(description), std::move(provenance), {}};
  for (int p = 1; p <= last && p <= n; ++p) fact.statuses[p] = status;
  return fact;
}

}  // namespace

CatalogEntry catalog_lookup(const std::string& name) {
  static const std::regex sphere_re(R"(S\^(\d+))");
  static const std::regex lens_re(R"(L_?(\d+)\(([-\d,\s]+)\))");
  static const std::regex bundle_re(R"(M_?(?:\{|\()(-?\d+),\s*(-?\d+)(?:\}|\)))");
  std::smatch match;
  CatalogEntry entry;
  entry.name = name;
  if (std::regex_match(name, match, sphere_re)) {
    Integer n = parse_integer(match[1].str());
    if (n < 1 || n > 4096) throw InvalidInput("sphere dimension must be in 1..4096");
    entry.dimension = static_cast<int>(n.get_si());
    entry.homology = sphere_homology(entry.dimension);
    entry.facts.push_back(all_targets(entry.dimension, Status::Exists,
                                      "the standard sphere admits special generic maps into every R^p",
                                      "S(M) = {1..n} exactly for the standard n-sphere",
                                      entry.dimension));
    return entry;
  }
  if (name == "RP5") {
    entry.dimension = 5;
    entry.homology = GradedGroup::from_list({FinAbGroup::free(1), FinAbGroup::cyclic(2), {},
                                             FinAbGroup::cyclic(2), {}, FinAbGroup::free(1)});
    entry.facts.push_back(all_targets(
        5, Status::Obstructed, "no special generic map RP^5 -> R^p for 1 <= p < 5",
        "covering-space Euler argument: S^5 -> RP^5 would induce a 2-sheeted cover of Stein "
        "factorizations, giving a contractible space with even Euler characteristic",
        4));
    return entry;
  }
  if (std::regex_match(name, match, lens_re)) {
    LensSpec spec(parse_integer(match[1].str()), parse_integer_list(match[2].str()));
    entry.name = spec.name();
    entry.dimension = spec.dimension();
    entry.homology = lens_homology(spec);
    entry.lens = std::move(spec);
    return entry;
  }
  if (std::regex_match(name, match, bundle_re)) {
    BundleSpec spec(parse_integer(match[1].str()), parse_integer(match[2].str()));
    entry.name = spec.name();
    entry.dimension = 7;
    entry.homology = bundle_homology(spec);
    entry.bundle = std::move(spec);
    return entry;
  }
  throw InvalidInput("unknown catalog entry '" + name +
                     "' (expected S^n, RP5, L_m(l1,...,lk) or M_{m,n})");
}

DimensionSetVerdict classify(const CatalogEntry& entry) {
  DimensionSetVerdict verdict;
  if (entry.lens) {
    verdict = lens_dimension_set(*entry.lens);
  } else if (entry.bundle) {
    verdict = bundle_dimension_set(*entry.bundle);
  } else {
    verdict = classify_homology(entry.homology, entry.dimension, entry.orientable);
  }
  for (const auto& fact : entry.facts) {
    for (const auto& [p, status] : fact.statuses) {
      auto& st = verdict.statuses.at(p);
      if (st.status != Status::Unknown && st.status != status) {
        throw InconsistencyError("recorded fact for p = " + std::to_string(p) +
                                 " contradicts derived status " + to_string(st.status));
      }
      st = {status, Reason::CatalogFact, fact.provenance};
    }
  }
  verdict.finalize();
  return verdict;
}

}  // namespace sgmtopo
