#include "sgmtopo/stein_les.hpp"

#include <sstream>

#include "sgmtopo/errors.hpp"

namespace sgmtopo {

SteinInstance::SteinInstance(int n, int p, GradedGroup wf_homology,
                             std::optional<GradedGroup> m_homology, bool orientable,
                             Coefficients coefficients)
    : n_(n),
      p_(p),
      wf_(std::move(wf_homology)),
      m_(std::move(m_homology)),
      orientable_(orientable),
      coefficients_(std::move(coefficients)) {
  if (p_ < 1 || p_ >= n_)
    throw InvalidInput("Stein instance needs 1 <= p < n, got n = " + std::to_string(n_) +
                       ", p = " + std::to_string(p_));
  for (const auto& [degree, group] : wf_.groups()) {
    if (degree > p_)
      throw InvalidInput("W_f has nontrivial homology in degree " + std::to_string(degree) +
                         " above p = " + std::to_string(p_));
  }
  if (m_) {
    for (const auto& [degree, group] : m_->groups())
      if (degree > n_)
        throw InvalidInput("M has homology in degree " + std::to_string(degree) + " above n");
  }
}

LowDegreeTransfer low_degree_transfer(const SteinInstance& inst) {
  LowDegreeTransfer out;
  GradedGroup wf = change_coefficients(inst.wf_homology(), inst.coefficients());
  std::optional<GradedGroup> m;
  if (inst.m_homology()) m = change_coefficients(*inst.m_homology(), inst.coefficients());
  for (int q = 0; q <= inst.n() - inst.p(); ++q) {
    FinAbGroup forced = wf.at(q);
    out.forced.emplace_back(q, forced);
    if (m && !(m->at(q) == forced)) {
      out.violations.push_back("H_" + std::to_string(q) + "(M) = " + m->at(q).to_string() +
                               " but W_f forces " + forced.to_string());
    }
  }
  return out;
}

GradedGroup ball_to_sphere(const SteinInstance& inst) {
  if (!inst.orientable()) throw InvalidInput("ball-to-sphere direction needs orientable M");
  if (!is_homology_ball(inst.wf_homology(), inst.p(), inst.coefficients())) {
    throw InvalidInput("W_f " + inst.wf_homology().to_string() + " is not a homology " +
                       std::to_string(inst.p()) + "-ball over " + inst.coefficients().to_string());
  }
  return sphere_homology(inst.n(), inst.coefficients());
}

ImplicationCheck sphere_to_ball_check(const SteinInstance& inst) {
  if (!inst.m_homology() || !inst.orientable()) return {};
  const auto& coeff = inst.coefficients();
  if (!is_homology_sphere(*inst.m_homology(), inst.n(), coeff)) return {};
  if (is_homology_ball(inst.wf_homology(), inst.p(), coeff)) return {};
  return {false, "M is a homology " + std::to_string(inst.n()) + "-sphere over " +
                     coeff.to_string() + " but W_f " + inst.wf_homology().to_string() +
                     " is not a homology " + std::to_string(inst.p()) + "-ball"};
}

namespace {

FinAbGroup finite_or_throw(const GradedGroup& g, int degree, const char* space) {
  FinAbGroup h = g.at(degree);
  if (!h.is_finite())
    throw InvalidInput(std::string("H_") + std::to_string(degree) + "(" + space +
                       ") is infinite; the sequence needs finite terms");
  return h;
}

}  // namespace

SequenceSkeleton prop42_sequence(const SteinInstance& inst, int k) {
  const int n = inst.n();
  if (n % 2 == 0) throw InvalidInput("the square-order sequence needs odd n");
  if (n < 5) throw InvalidInput("the square-order sequence needs n >= 5");
  if (n != 2 * k + 1) throw InvalidInput("n must equal 2k+1");
  const GradedGroup& wf = inst.wf_homology();
  if (wf.coefficients() != Coefficients::integers())
    throw InvalidInput("the square-order sequence needs integral W_f homology");
  const auto& m = inst.m_homology();
  if (m && m->coefficients() != Coefficients::integers())
    throw InvalidInput("the square-order sequence needs integral M homology");

  SequenceSkeleton skel;
  const int last_s = k - 2;
  skel.hi = 3 * last_s + 2;
  skel.lo = -skel.hi;
  for (int s = 0; s <= last_s; ++s) {
    FinAbGroup low = finite_or_throw(wf, k - s, "W_f");
    FinAbGroup high = finite_or_throw(wf, k + 1 + s, "W_f");
    skel.terms[3 * s + 1] = low;
    skel.terms[-(3 * s + 1)] = low;
    skel.terms[3 * s + 2] = high;
    skel.terms[-(3 * s + 2)] = high;
  }
  for (int s = 1; s <= last_s; ++s) {
    if (m) {
      FinAbGroup right = finite_or_throw(*m, k - s, "M");
      FinAbGroup left = finite_or_throw(*m, k + s, "M");
      if (order(left) != order(right)) {
        throw InvalidInput("M violates duality in order: |H_" + std::to_string(k - s) +
                           "(M)| != |H_" + std::to_string(k + s) + "(M)|");
      }
      skel.terms[3 * s] = right;
      skel.terms[-3 * s] = left;
    } else {
      // Between H_{k+s}(W_f) and H_{k-s}(W_f) on both sides.
      bool squeezed = skel.terms.at(3 * s - 1)->is_trivial() && skel.terms.at(3 * s + 1)->is_trivial();
      skel.terms[3 * s] = squeezed ? std::optional<FinAbGroup>(FinAbGroup{}) : std::nullopt;
      skel.terms[-3 * s] = skel.terms[3 * s];
    }
  }
  skel.terms[0] = m ? std::optional<FinAbGroup>(finite_or_throw(*m, k, "M")) : std::nullopt;
  return skel;
}

RealizationParameters realization_parameters(const Integer& m) {
  if (m < 1) throw InvalidInput("realization needs m >= 1 (m = 0 would make H_1 infinite)");
  const bool odd = mod_floor(m, 2) == 1;
  RealizationParameters out{};
  out.a = odd ? 4 : 5;
  // n = 2r + 3 > p = a + r  <=>  r > a - 3.
  out.r = out.a - 2;
  out.k = out.r + 1;
  out.p = out.a + out.r;
  out.n = 2 * out.k + 1;
  std::ostringstream w;
  w << "regular neighbourhood V in R^" << out.p << " of the " << out.r
    << "-fold suspension of the punctured lens space L(" << m << ", 1) \\ pt embedded in R^"
    << out.a << (odd ? " (odd m)" : " (any orientable 3-manifold embeds in R^5)")
    << "; H_" << out.k << "(V) = Z/" << m;
  if (m == 1) w << " (trivial: V is a ball)";
  out.w_description = w.str();
  if (!odd) {
    out.open_question =
        "k = 3 is not realized for even m; whether a rational homology 7-sphere with even "
        "|H_3| admits such a map into R^p, p < 7, is open";
  }
  return out;
}

SteinInstance realization_instance(const Integer& m) {
  auto params = realization_parameters(m);
  std::map<int, FinAbGroup> wf{{0, FinAbGroup::free(1)}, {params.k, FinAbGroup::cyclic(m)}};
  return {params.n, params.p, GradedGroup(params.p, std::move(wf))};
}

std::vector<FinAbGroup> realization_candidates(const Integer& m, long bound) {
  if (m < 1) throw InvalidInput("realization needs m >= 1");
  FinAbGroup zm = FinAbGroup::cyclic(m);
  return enumerate_extensions(zm, zm, bound);
}

}  // namespace sgmtopo
