#include "sgmtopo/exact_sequence.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <vector>

#include "sgmtopo/errors.hpp"
#include "sgmtopo/zlinalg.hpp"

namespace sgmtopo {

ExactSequence::ExactSequence(int lo, int hi, std::map<int, FinAbGroup> terms,
                             std::map<int, GroupHom> maps)
    : lo_(lo), hi_(hi), terms_(std::move(terms)), maps_(std::move(maps)) {
  if (lo_ > hi_) throw InvalidInput("exact sequence needs lo <= hi");
  for (const auto& [i, g] : terms_) {
    if (i < lo_ || i > hi_) {
      if (!g.is_trivial())
        throw InvalidInput("nontrivial term A_" + std::to_string(i) + " outside index range");
    }
    if (!g.is_finite()) throw InvalidInput("term A_" + std::to_string(i) + " is infinite");
  }
  for (const auto& [i, f] : maps_) {
    if (i < lo_ || i >= hi_) {
      if (!f.is_zero())
        throw InvalidInput("nonzero map alpha_" + std::to_string(i) + " outside index range");
      continue;
    }
    if (!(f.source() == term(i)) || !(f.target() == term(i + 1)))
      throw InvalidInput("map alpha_" + std::to_string(i) + " does not go A_" + std::to_string(i) +
                         " -> A_" + std::to_string(i + 1));
  }
}

FinAbGroup ExactSequence::term(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? FinAbGroup{} : it->second;
}

GroupHom ExactSequence::map(int index) const {
  auto it = maps_.find(index);
  if (it != maps_.end() && index >= lo_ && index < hi_) return it->second;
  return GroupHom::zero(term(index), term(index + 1));
}

ExactSequence ExactSequence::with_map(int index, GroupHom replacement) const {
  auto maps = maps_;
  maps.insert_or_assign(index, std::move(replacement));
  return {lo_, hi_, terms_, std::move(maps)};
}

std::string ExactnessReport::to_string() const {
  if (exact) return "exact";
  std::ostringstream os;
  os << "not exact at index " << *failed_index << ": |ker| = " << kernel_order
     << ", |im| = " << image_order;
  return os.str();
}

namespace {

IntMatrix diagonal_of(const FinAbGroup& g) {
  return IntMatrix::diagonal(g.invariant_factors());
}

Integer hermite_det(const IntMatrix& basis) {
  // Square, full rank, upper triangular.
  Integer det = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i) det *= basis(i, i);
  return det;
}

struct LatticePair {
  IntMatrix kernel;  // Hermite basis (rows) of the lifted kernel of alpha_i
  IntMatrix image;   // Hermite basis (rows) of the lifted image of alpha_{i-1}
};

LatticePair lifted_lattices(const ExactSequence& seq, int index) {
  const FinAbGroup a = seq.term(index);
  const FinAbGroup next = seq.term(index + 1);
  const std::size_t t = a.generator_count();
  const IntMatrix d = diagonal_of(a);

  IntMatrix relations = seq.map(index).matrix().hconcat(diagonal_of(next));
  IntMatrix kernel = kernel_basis(relations);
  IntMatrix kernel_gens(t, kernel.cols());
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < kernel.cols(); ++c) kernel_gens(r, c) = kernel(r, c);

  IntMatrix image_gens = seq.map(index - 1).matrix().hconcat(d);
  return {lattice_hermite_basis(kernel_gens.hconcat(d)), lattice_hermite_basis(image_gens)};
}

// Mixed-radix element codec for a finite normal-form group.
class ElementCodec {
 public:
  ElementCodec(const FinAbGroup& g, long bound) {
    auto n = *order(g);
    if (n > bound)
      throw ResourceLimitExceeded("element enumeration: |A| = " + sgmtopo::to_string(n) +
                                  " exceeds bound " + std::to_string(bound));
    size_ = n.get_si();
    for (const auto& f : g.invariant_factors()) radices_.push_back(f.get_si());
  }
  long size() const { return size_; }
  std::vector<Integer> decode(long code) const {
    std::vector<Integer> x(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      x[i] = code % radices_[i];
      code /= radices_[i];
    }
    return x;
  }
  long encode(const std::vector<Integer>& x) const {
    long code = 0;
    for (std::size_t i = radices_.size(); i-- > 0;) code = code * radices_[i] + x[i].get_si();
    return code;
  }

 private:
  long size_ = 1;
  std::vector<long> radices_;
};

}  // namespace

std::pair<Integer, Integer> kernel_and_image_orders(const ExactSequence& seq, int index,
                                                    ExactnessMethod method, long bound) {
  const FinAbGroup a = seq.term(index);
  if (method == ExactnessMethod::Presentation) {
    auto lattices = lifted_lattices(seq, index);
    Integer n = *order(a);
    return {n / hermite_det(lattices.kernel), n / hermite_det(lattices.image)};
  }
  ElementCodec codec(a, bound);
  ElementCodec prev_codec(seq.term(index - 1), bound);
  const GroupHom out = seq.map(index);
  const GroupHom in = seq.map(index - 1);
  long kernel = 0;
  for (long c = 0; c < codec.size(); ++c) {
    auto x = codec.decode(c);
    auto y = out.apply(x);
    if (std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; })) ++kernel;
  }
  std::vector<bool> hit(static_cast<std::size_t>(codec.size()), false);
  long image = 0;
  for (long c = 0; c < prev_codec.size(); ++c) {
    long target = codec.encode(in.apply(prev_codec.decode(c)));
    if (!hit[static_cast<std::size_t>(target)]) {
      hit[static_cast<std::size_t>(target)] = true;
      ++image;
    }
  }
  return {Integer(kernel), Integer(image)};
}

ExactnessReport verify_exactness(const ExactSequence& seq, ExactnessMethod method, long bound) {
  for (int i = seq.lo(); i <= seq.hi(); ++i) {
    bool equal = false;
    Integer ker, im;
    if (method == ExactnessMethod::Presentation) {
      auto lattices = lifted_lattices(seq, i);
      Integer n = seq.term_order(i);
      ker = n / hermite_det(lattices.kernel);
      im = n / hermite_det(lattices.image);
      equal = lattices.kernel == lattices.image;
    } else {
      ElementCodec codec(seq.term(i), bound);
      ElementCodec prev_codec(seq.term(i - 1), bound);
      const GroupHom out = seq.map(i);
      const GroupHom in = seq.map(i - 1);
      std::vector<bool> in_kernel(static_cast<std::size_t>(codec.size()), false);
      std::vector<bool> in_image(static_cast<std::size_t>(codec.size()), false);
      long k = 0, m = 0;
      for (long c = 0; c < codec.size(); ++c) {
        auto y = out.apply(codec.decode(c));
        if (std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; })) {
          in_kernel[static_cast<std::size_t>(c)] = true;
          ++k;
        }
      }
      for (long c = 0; c < prev_codec.size(); ++c) {
        auto target = static_cast<std::size_t>(codec.encode(in.apply(prev_codec.decode(c))));
        if (!in_image[target]) {
          in_image[target] = true;
          ++m;
        }
      }
      ker = k;
      im = m;
      equal = in_kernel == in_image;
    }
    if (!equal) return {false, i, ker, im};
  }
  return {};
}

AlternatingProducts alternating_order_identity(const ExactSequence& seq) {
  auto report = verify_exactness(seq);
  if (!report.exact) throw InconsistencyError("sequence is " + report.to_string());
  AlternatingProducts out{1, 1};
  for (int i = seq.lo(); i <= seq.hi(); ++i) (i % 2 != 0 ? out.odd : out.even) *= seq.term_order(i);
  return out;
}

namespace {

SquareOrderCertificate square_from_orders(const std::map<int, Integer>& orders,
                                          const std::optional<Integer>& a0) {
  Integer x = 1, y = 1;
  for (const auto& [i, n] : orders) {
    if (i > 0 && i % 2 == 1) x *= n;
    if (i > 0 && i % 2 == 0) y *= n;
  }
  if (mod_floor(x, y) != 0) {
    throw InconsistencyError("x = " + to_string(x) + " is not divisible by y = " + to_string(y) +
                             "; the orders cannot come from an exact sequence");
  }
  Integer k = x / y;
  Integer forced = k * k;
  if (a0 && *a0 != forced) {
    throw InconsistencyError("|A_0| = " + to_string(*a0) + " but the orders force " +
                             to_string(forced));
  }
  return {k, x, y, forced};
}

}  // namespace

SquareOrderCertificate lemma_square_order(const ExactSequence& seq) {
  auto report = verify_exactness(seq);
  if (!report.exact) throw InconsistencyError("sequence is " + report.to_string());
  const int reach = std::max(std::abs(seq.lo()), std::abs(seq.hi()));
  std::map<int, Integer> orders;
  for (int i = 1; i <= reach; ++i) {
    if (seq.term_order(-i) != seq.term_order(i)) {
      throw InvalidInput("order symmetry fails: |A_-" + std::to_string(i) +
                         "| = " + to_string(seq.term_order(-i)) + ", |A_" + std::to_string(i) +
                         "| = " + to_string(seq.term_order(i)));
    }
    orders.emplace(i, seq.term_order(i));
  }
  return square_from_orders(orders, seq.term_order(0));
}

std::optional<FinAbGroup> SequenceSkeleton::term(int index) const {
  if (index < lo || index > hi) return FinAbGroup{};
  auto it = terms.find(index);
  return it == terms.end() ? std::optional<FinAbGroup>(FinAbGroup{}) : it->second;
}

bool SequenceSkeleton::symmetric_orders() const {
  const int reach = std::max(std::abs(lo), std::abs(hi));
  for (int i = 1; i <= reach; ++i) {
    auto left = term(-i), right = term(i);
    if (!left || !right || order(*left) != order(*right)) return false;
  }
  return true;
}

SquareOrderCertificate lemma_square_order(const SequenceSkeleton& skeleton) {
  const int reach = std::max(std::abs(skeleton.lo), std::abs(skeleton.hi));
  std::map<int, Integer> orders;
  for (int i = -reach; i <= reach; ++i) {
    if (i == 0) continue;
    auto t = skeleton.term(i);
    if (!t) throw InvalidInput("term A_" + std::to_string(i) + " is unknown");
    if (!t->is_finite()) throw InvalidInput("term A_" + std::to_string(i) + " is infinite");
    orders.emplace(i, *order(*t));
  }
  for (int i = 1; i <= reach; ++i) {
    if (orders.at(-i) != orders.at(i))
      throw InvalidInput("order symmetry fails at index " + std::to_string(i));
  }
  std::optional<Integer> a0;
  if (auto t = skeleton.term(0)) {
    if (!t->is_finite()) throw InvalidInput("term A_0 is infinite");
    a0 = *order(*t);
  }
  return square_from_orders(orders, a0);
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

FinAbGroup random_group_of_order(Rng& rng, long n) {
  std::vector<Integer> torsion;
  while (n > 1) {
    std::vector<long> divisors;
    for (long d = 2; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    long d = divisors[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(divisors.size()) - 1))];
    torsion.emplace_back(d);
    n /= d;
  }
  return FinAbGroup::canonicalize(0, std::move(torsion));
}

long isqrt(long n) {
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// A_i as a random extension 0 -> sub -> A_i -> quotient -> 0 in
// presentation coordinates (sub generators first).
struct Extension {
  PresentedGroup presented;
  std::size_t sub_gens;
  std::size_t quotient_gens;
};

Extension random_extension(Rng& rng, const FinAbGroup& sub, const FinAbGroup& quotient) {
  const std::size_t s = sub.generator_count(), q = quotient.generator_count();
  IntMatrix relations(s + q, s + q);
  for (std::size_t i = 0; i < s; ++i) {
    relations(i, i) = sub.invariant_factors()[i];
    for (std::size_t j = 0; j < q; ++j) {
      long modulus = sub.invariant_factors()[i].get_si();
      relations(i, s + j) = uniform(rng, 0, modulus - 1);
    }
  }
  for (std::size_t j = 0; j < q; ++j) relations(s + j, s + j) = quotient.invariant_factors()[j];
  return {present_cokernel(relations), s, q};
}

// Glues A_i = ext(I_i, I_{i+1}) for images[0..] with images.front() and
// images.back() trivial; A_i sits at index lo + i.
ExactSequence glue(Rng& rng, int lo, const std::vector<FinAbGroup>& images) {
  std::vector<Extension> parts;
  for (std::size_t i = 0; i + 1 < images.size(); ++i)
    parts.push_back(random_extension(rng, images[i], images[i + 1]));

  std::map<int, FinAbGroup> terms;
  std::map<int, GroupHom> maps;
  for (std::size_t i = 0; i < parts.size(); ++i)
    terms.emplace(lo + static_cast<int>(i), parts[i].presented.group);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const auto& from = parts[i];
    const auto& to = parts[i + 1];
    // (x, y) -> (y, 0): project onto I_{i+1}, then include it as the
    // subgroup of the next term.
    IntMatrix project(to.sub_gens + to.quotient_gens, from.sub_gens + from.quotient_gens);
    for (std::size_t j = 0; j < from.quotient_gens; ++j) project(j, from.sub_gens + j) = 1;
    IntMatrix m = to.presented.to_canonical * project * from.presented.from_canonical;
    maps.emplace(lo + static_cast<int>(i),
                 GroupHom(from.presented.group, to.presented.group, std::move(m)));
  }
  return {lo, lo + static_cast<int>(parts.size()) - 1, std::move(terms), std::move(maps)};
}

}  // namespace

ExactSequence splice_random(std::uint64_t seed, int length, long order_bound) {
  if (length < 1) throw InvalidInput("splice length must be >= 1");
  if (order_bound < 1 || order_bound > kDefaultEnumerationBound)
    throw InvalidInput("order bound must be in 1..4096");
  Rng rng(seed);
  const long image_bound = std::max(1L, isqrt(order_bound));
  std::vector<FinAbGroup> images{FinAbGroup{}};
  for (int i = 0; i <= length; ++i)
    images.push_back(random_group_of_order(rng, uniform(rng, 1, image_bound)));
  images.emplace_back();
  return glue(rng, 0, images);
}

ExactSequence splice_symmetric(std::uint64_t seed, int reach, long order_bound) {
  if (reach < 1) throw InvalidInput("symmetric splice reach must be >= 1");
  if (order_bound < 1 || order_bound > kDefaultEnumerationBound)
    throw InvalidInput("order bound must be in 1..4096");
  Rng rng(seed);
  const long image_bound = std::max(1L, isqrt(order_bound));
  // images[j] = I_{j - reach}; I_{-reach} = I_{reach+1} = 0 and
  // |I_{1-j}| = |I_j|.
  const std::size_t count = 2 * static_cast<std::size_t>(reach) + 2;
  std::vector<long> orders(count, 1);
  for (int j = -reach + 1; j <= 0; ++j) {
    long n = uniform(rng, 1, image_bound);
    orders[static_cast<std::size_t>(j + reach)] = n;
    orders[static_cast<std::size_t>(1 - j + reach)] = n;
  }
  std::vector<FinAbGroup> images;
  for (long n : orders) images.push_back(random_group_of_order(rng, n));
  images.front() = FinAbGroup{};
  images.back() = FinAbGroup{};
  return glue(rng, -reach, images);
}

}  // namespace sgmtopo
