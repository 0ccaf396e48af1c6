#include "sgmtopo/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgmtopo/dimension_set.hpp"
#include "sgmtopo/errors.hpp"
#include "sgmtopo/json_io.hpp"

namespace sgmtopo::cli {

namespace {

using json::Json;

std::vector<Integer> parse_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
  if (out.empty()) throw InvalidInput("expected a comma-separated list of integers");
  return out;
}

std::optional<bool> parse_yes_no(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "yes" || text == "true") return true;
  if (text == "no" || text == "false") return false;
  throw InvalidInput("expected yes or no, got '" + text + "'");
}

void print_homology(std::ostream& out, const GradedGroup& g) {
  for (int d = 0; d <= g.top_degree(); ++d) {
    std::string label = g.at(d).to_string();
    if (g.coefficients().is_field() && !g.at(d).is_trivial())
      label = g.coefficients().to_string() + "^" + std::to_string(g.at(d).rank());
    out << "  H_" << d << " = " << label << '\n';
  }
}

void print_verdict(std::ostream& out, const DimensionSetVerdict& v) {
  out << "  p   status      reason\n";
  for (const auto& [p, st] : v.statuses) {
    out << "  " << std::left << std::setw(4) << p << std::setw(12) << to_string(st.status)
        << to_string(st.reason);
    if (!st.note.empty()) out << "  (" << st.note << ')';
    out << '\n';
  }
  out << "  S(M) = ";
  if (!v.summary) {
    out << "undetermined\n";
    return;
  }
  if (v.summary->empty()) {
    out << "{}\n";
    return;
  }
  out << '{';
  bool first = true;
  for (int p : *v.summary) {
    out << (first ? "" : ", ") << p;
    first = false;
  }
  out << "}\n";
}

struct Options {
  bool json = false;
  std::string input;
  std::string coeff = "Z";
  std::string m;
  std::string l;
  std::string em;
  std::string en;
  bool classify = false;
  std::string stably_parallelizable;
  std::string name;
  std::vector<std::string> random;
};

int cmd_homology(const Options& o, std::ostream& out) {
  auto complex = json::chain_complex_from_json(json::read_file(o.input));
  auto coeff = Coefficients::parse(o.coeff);
  auto h = homology(complex, coeff);
  if (o.json) {
    out << json::dump(json::to_json(h)) << '\n';
    return 0;
  }
  out << "homology over " << coeff.to_string() << ":\n";
  print_homology(out, h);
  out << "  euler characteristic = " << euler_characteristic(h) << '\n';
  return 0;
}

int cmd_lens(const Options& o, std::ostream& out) {
  LensSpec spec(parse_integer(o.m), parse_list(o.l));
  auto h = lens_homology(spec);
  std::optional<DimensionSetVerdict> verdict;
  if (o.classify) verdict = lens_dimension_set(spec, parse_yes_no(o.stably_parallelizable));
  auto emss = emss_stably_parallelizable(spec);
  if (o.json) {
    Json j{{"name", spec.name()}, {"dimension", spec.dimension()}, {"homology", json::to_json(h)}};
    j["stably_parallelizable"] = emss ? Json(*emss) : Json(nullptr);
    if (verdict) j["verdict"] = json::to_json(*verdict);
    out << json::dump(j) << '\n';
    return 0;
  }
  out << spec.name() << " (dimension " << spec.dimension() << ")\n";
  print_homology(out, h);
  out << "  stably parallelizable (odd-prime criterion): "
      << (emss ? (*emss ? "yes" : "no") : "not applicable") << '\n';
  if (verdict) print_verdict(out, *verdict);
  return 0;
}

int cmd_bundle(const Options& o, std::ostream& out) {
  BundleSpec spec(parse_integer(o.em), parse_integer(o.en));
  auto h = bundle_homology(spec);
  std::optional<DimensionSetVerdict> verdict;
  if (o.classify) verdict = bundle_dimension_set(spec);
  if (o.json) {
    Json j{{"name", spec.name()}, {"dimension", 7}, {"homology", json::to_json(h)}};
    if (verdict) j["verdict"] = json::to_json(*verdict);
    out << json::dump(j) << '\n';
    return 0;
  }
  out << spec.name() << " (dimension 7)\n";
  print_homology(out, h);
  if (verdict) print_verdict(out, *verdict);
  return 0;
}

Json facts_json(const CatalogEntry& entry) {
  Json facts = Json::array();
  for (const auto& f : entry.facts) {
    Json statuses = Json::object();
    for (const auto& [p, s] : f.statuses) statuses[std::to_string(p)] = to_string(s);
    facts.push_back(Json{{"description", f.description},
                         {"provenance", f.provenance},
                         {"statuses", std::move(statuses)}});
  }
  return facts;
}

void print_facts(std::ostream& out, const CatalogEntry& entry) {
  for (const auto& f : entry.facts) {
    out << "  fact: " << f.description << '\n' << "    provenance: " << f.provenance << '\n';
  }
}

int cmd_catalog(const Options& o, std::ostream& out) {
  auto entry = catalog_lookup(o.name);
  if (o.json) {
    Json j{{"name", entry.name},
           {"dimension", entry.dimension},
           {"orientable", entry.orientable},
           {"homology", json::to_json(entry.homology)},
           {"facts", facts_json(entry)}};
    out << json::dump(j) << '\n';
    return 0;
  }
  out << entry.name << " (dimension " << entry.dimension
      << (entry.orientable ? ", orientable" : ", non-orientable") << ")\n";
  print_homology(out, entry.homology);
  print_facts(out, entry);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto entry = catalog_lookup(o.name);
  auto square = square_obstruction(entry.homology, entry.dimension, entry.orientable);
  auto verdict = classify(entry);
  if (o.json) {
    Json j{{"name", entry.name},
           {"dimension", entry.dimension},
           {"homology", json::to_json(entry.homology)},
           {"square_obstruction", to_string(square.outcome)},
           {"verdict", json::to_json(verdict)}};
    out << json::dump(j) << '\n';
    return 0;
  }
  out << entry.name << " (dimension " << entry.dimension << ")\n";
  out << "  square obstruction: " << to_string(square.outcome) << " (" << square.reason << ")\n";
  print_facts(out, entry);
  print_verdict(out, verdict);
  return 0;
}

int cmd_realize(const Options& o, std::ostream& out) {
  Integer m = parse_integer(o.m);
  auto params = realization_parameters(m);
  auto inst = realization_instance(m);
  auto skeleton = prop42_sequence(inst, params.k);
  auto cert = lemma_square_order(skeleton);
  auto candidates = realization_candidates(m, enumeration_bound());
  if (o.json) {
    Json cj = Json::array();
    for (const auto& g : candidates) cj.push_back(json::to_json(g));
    Json j{{"m", json::to_json(m)},
           {"k", params.k},
           {"p", params.p},
           {"n", params.n},
           {"a", params.a},
           {"r", params.r},
           {"w", params.w_description},
           {"wf_homology", json::to_json(inst.wf_homology())},
           {"middle_order", json::to_json(cert.a0)},
           {"witness", json::to_json(cert.k)},
           {"candidates", std::move(cj)}};
    j["open_question"] = params.open_question ? Json(*params.open_question) : Json(nullptr);
    out << json::dump(j) << '\n';
    return 0;
  }
  out << "m = " << m << ": (k, p, n) = (" << params.k << ", " << params.p << ", " << params.n
      << "), a = " << params.a << ", r = " << params.r << '\n';
  out << "  W: " << params.w_description << '\n';
  out << "  |H_" << params.k << "(M)| = " << cert.a0 << " = " << cert.k << "^2\n";
  out << "  candidates for H_" << params.k << "(M):";
  for (std::size_t i = 0; i < candidates.size(); ++i)
    out << (i ? ", " : " ") << candidates[i].to_string();
  out << '\n';
  if (params.open_question) out << "  open: " << *params.open_question << '\n';
  return 0;
}

int check_sequence(const ExactSequence& seq, std::ostream& out, bool json_mode, Json* record) {
  auto report = verify_exactness(seq);
  Json j{{"lo", seq.lo()}, {"hi", seq.hi()}, {"exact", report.exact}};
  if (!report.exact) {
    j["failed_index"] = *report.failed_index;
    j["kernel_order"] = json::to_json(report.kernel_order);
    j["image_order"] = json::to_json(report.image_order);
    if (record) *record = j;
    if (json_mode && !record) out << json::dump(j) << '\n';
    if (!json_mode) out << "not exact: " << report.to_string() << '\n';
    throw InconsistencyError("sequence is not exact at index " +
                             std::to_string(*report.failed_index));
  }
  auto products = alternating_order_identity(seq);
  j["odd_product"] = json::to_json(products.odd);
  j["even_product"] = json::to_json(products.even);
  SequenceSkeleton skeleton{seq.lo(), seq.hi(), {}};
  for (int i = seq.lo(); i <= seq.hi(); ++i) skeleton.terms[i] = seq.term(i);
  std::optional<SquareOrderCertificate> cert;
  if (skeleton.symmetric_orders()) cert = lemma_square_order(seq);
  if (cert) {
    j["square_root"] = json::to_json(cert->k);
    j["a0"] = json::to_json(cert->a0);
  } else {
    j["square_root"] = nullptr;
  }
  if (record) {
    *record = j;
  } else if (json_mode) {
    out << json::dump(j) << '\n';
  } else {
    out << "exact on [" << seq.lo() << ", " << seq.hi() << "]; odd product = " << products.odd
        << ", even product = " << products.even << '\n';
    if (cert)
      out << "  symmetric: |A_0| = " << cert->a0 << " = " << cert->k << "^2\n";
    else
      out << "  orders not symmetric about 0; square lemma not applicable\n";
  }
  return 0;
}

int cmd_lemma_check(const Options& o, std::ostream& out) {
  if (!o.input.empty() && !o.random.empty())
    throw InvalidInput("lemma-check takes either --input or --random, not both");
  if (!o.input.empty()) {
    auto seq = json::sequence_from_json(json::read_file(o.input));
    return check_sequence(seq, out, o.json, nullptr);
  }
  if (o.random.size() != 2) throw InvalidInput("lemma-check needs --input FILE or --random SEED COUNT");
  Integer seed = parse_integer(o.random[0]);
  Integer count = parse_integer(o.random[1]);
  if (seed < 0 || !seed.fits_ulong_p()) throw InvalidInput("seed must be a non-negative 64-bit value");
  if (count < 1 || count > 100000) throw InvalidInput("count must be in 1..100000");
  const std::uint64_t base = seed.get_ui();
  const long n = count.get_si();
  long passed = 0;
  Json records = Json::array();
  for (long i = 0; i < n; ++i) {
    auto seq = splice_symmetric(base + static_cast<std::uint64_t>(i), 1 + static_cast<int>(i % 4), 256);
    Json record;
    check_sequence(seq, out, o.json, &record);
    records.push_back(std::move(record));
    ++passed;
  }
  if (o.json) {
    out << json::dump(Json{{"seed", json::to_json(seed)}, {"count", n}, {"passed", passed},
                           {"results", std::move(records)}})
        << '\n';
  } else {
    out << passed << "/" << n << " random symmetric exact sequences satisfy |A_0| = k^2\n";
  }
  return 0;
}

int cmd_snf(const Options& o, std::ostream& out) {
  auto a = json::matrix_from_json(json::read_file(o.input));
  auto snf = smith_normal_form(a);
  if (o.json) {
    out << json::dump(json::to_json(snf)) << '\n';
    return 0;
  }
  out << "S =\n" << snf.S << "U =\n" << snf.U << "V =\n" << snf.V;
  out << "diagonal:";
  for (const auto& d : snf.diagonal()) out << ' ' << d;
  out << "\nrank: " << snf.rank() << '\n';
  return 0;
}

}  // namespace

long enumeration_bound() {
  const char* env = std::getenv("SGM_TOPO_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBound;
  Integer v = parse_integer(env);
  if (v < 1 || !v.fits_slong_p()) throw InvalidInput("SGM_TOPO_MAX_ORDER must be a positive integer");
  return v.get_si();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology and special generic map obstructions", "sgm-topo"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

  auto* hom = app.add_subcommand("homology", "Homology of a chain complex given as JSON");
  hom->add_option("--input", o.input, "Chain complex JSON file")->required();
  hom->add_option("--coeff", o.coeff, "Z, Q or Fp:P");
  add_json(hom);

  auto* lens = app.add_subcommand("lens", "Lens space L_m(l_1, ..., l_{k+1})");
  lens->add_option("--m", o.m, "m > 1")->required();
  lens->add_option("--l", o.l, "Comma-separated weights")->required();
  lens->add_flag("--classify", o.classify, "Compute the dimension-set verdict");
  lens->add_option("--stably-parallelizable", o.stably_parallelizable,
                   "yes or no, used when the odd-prime criterion does not apply");
  add_json(lens);

  auto* bundle = app.add_subcommand("bundle", "Linear S^3-bundle M_{m,n} over S^4");
  bundle->add_option("--em", o.em, "m")->required();
  bundle->add_option("--en", o.en, "n != 0")->required();
  bundle->add_flag("--classify", o.classify, "Compute the dimension-set verdict");
  add_json(bundle);

  auto* cls = app.add_subcommand("classify", "Dimension-set verdict for a catalog entry");
  cls->add_option("name", o.name, "S^n, RP5, L_m(...) or M_{m,n}")->required();
  add_json(cls);

  auto* realize = app.add_subcommand("realize", "Realization parameters for |H_k(W)| = m");
  realize->add_option("--m", o.m, "m >= 1")->required();
  add_json(realize);

  auto* lemma = app.add_subcommand("lemma-check", "Check exactness and the square-order lemma");
  lemma->add_option("--input", o.input, "Exact sequence JSON file");
  lemma->add_option("--random", o.random, "SEED COUNT")->expected(2);
  add_json(lemma);

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--input", o.input, "Matrix JSON file")->required();
  add_json(snf);

  auto* catalog = app.add_subcommand("catalog", "Homology and recorded facts for a catalog entry");
  catalog->add_option("name", o.name, "S^n, RP5, L_m(...) or M_{m,n}")->required();
  add_json(catalog);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (hom->parsed()) return cmd_homology(o, out);
    if (lens->parsed()) return cmd_lens(o, out);
    if (bundle->parsed()) return cmd_bundle(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (realize->parsed()) return cmd_realize(o, out);
    if (lemma->parsed()) return cmd_lemma_check(o, out);
    if (snf->parsed()) return cmd_snf(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace sgmtopo::cli
