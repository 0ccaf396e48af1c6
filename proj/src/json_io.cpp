#include "sgmtopo/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sgmtopo/errors.hpp"

namespace sgmtopo::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing JSON field '") + key + "'");
  return *it;
}

int small_int(const Json& j, const char* what) {
  Integer v = integer_from_json(j);
  if (v < -(1 << 20) || v > (1 << 20)) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<int>(v.get_si());
}

std::size_t count(const Json& j, const char* what) {
  int v = small_int(j, what);
  if (v < 0) throw InvalidInput(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

int key_to_int(const std::string& key) {
  Integer v = parse_integer(key);
  if (v < -(1 << 20) || v > (1 << 20)) throw InvalidInput("index key '" + key + "' out of range");
  return static_cast<int>(v.get_si());
}

bool field_bool(const Json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw InvalidInput(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

Coefficients coefficients_field(const Json& j) {
  auto it = j.find("coefficients");
  if (it == j.end()) return Coefficients::integers();
  if (!it->is_string()) throw InvalidInput("coefficients must be a string");
  return Coefficients::parse(it->get<std::string>());
}

}  // namespace

Json to_json(const Integer& value) {
  std::int64_t small = 0;
  if (fits_int64(value, small)) return small;
  return sgmtopo::to_string(value);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_float()) throw InvalidInput("floating-point numbers are not accepted");
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json to_json(const FinAbGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_json(d));
  return Json{{"rank", g.rank()}, {"invariant_factors", std::move(factors)}};
}

FinAbGroup group_from_json(const Json& j) {
  std::size_t rank = count(field(j, "rank"), "rank");
  const Json& factors = field(j, "invariant_factors");
  if (!factors.is_array()) throw InvalidInput("invariant_factors must be an array");
  std::vector<Integer> torsion;
  for (const auto& d : factors) torsion.push_back(integer_from_json(d));
  return FinAbGroup::canonicalize(rank, std::move(torsion));
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
  std::size_t rows = count(field(j, "rows"), "rows");
  std::size_t cols = count(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw InvalidInput("matrix entries must be an array of " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw InvalidInput("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) +
                         " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(entries[i][c]);
  }
  return m;
}

Json to_json(const ChainComplex& c) {
  Json cells = Json::array();
  for (auto n : c.cell_counts()) cells.push_back(n);
  Json boundaries = Json::object();
  for (int d = 1; d <= c.max_degree(); ++d) boundaries[std::to_string(d)] = to_json(c.boundary(d));
  return Json{{"max_degree", c.max_degree()}, {"cells", std::move(cells)},
              {"boundaries", std::move(boundaries)}};
}

ChainComplex chain_complex_from_json(const Json& j) {
  int max_degree = small_int(field(j, "max_degree"), "max_degree");
  const Json& cells_json = field(j, "cells");
  if (!cells_json.is_array() || static_cast<int>(cells_json.size()) != max_degree + 1)
    throw InvalidInput("cells must list counts for degrees 0..max_degree");
  std::vector<std::size_t> cells;
  for (const auto& c : cells_json) cells.push_back(count(c, "cell count"));
  std::map<int, IntMatrix> boundaries;
  auto it = j.find("boundaries");
  if (it != j.end()) {
    if (!it->is_object()) throw InvalidInput("boundaries must be an object keyed by degree");
    for (const auto& [key, value] : it->items()) boundaries[key_to_int(key)] = matrix_from_json(value);
  }
  return ChainComplex(std::move(cells), std::move(boundaries));
}

Json to_json(const GradedGroup& g) {
  Json groups = Json::object();
  for (int d = 0; d <= g.top_degree(); ++d) groups[std::to_string(d)] = to_json(g.at(d));
  return Json{{"top_degree", g.top_degree()},
              {"coefficients", g.coefficients().to_string()},
              {"groups", std::move(groups)}};
}

GradedGroup graded_group_from_json(const Json& j) {
  int top = small_int(field(j, "top_degree"), "top_degree");
  std::map<int, FinAbGroup> groups;
  const Json& gj = field(j, "groups");
  if (!gj.is_object()) throw InvalidInput("groups must be an object keyed by degree");
  for (const auto& [key, value] : gj.items()) groups[key_to_int(key)] = group_from_json(value);
  return GradedGroup(top, std::move(groups), coefficients_field(j));
}

Json to_json(const ExactSequence& seq) {
  Json terms = Json::object();
  for (int i = seq.lo(); i <= seq.hi(); ++i) terms[std::to_string(i)] = to_json(seq.term(i));
  Json maps = Json::object();
  for (int i = seq.lo(); i < seq.hi(); ++i) maps[std::to_string(i)] = to_json(seq.map(i).matrix());
  return Json{{"lo", seq.lo()}, {"hi", seq.hi()}, {"terms", std::move(terms)},
              {"maps", std::move(maps)}};
}

ExactSequence sequence_from_json(const Json& j) {
  int lo = small_int(field(j, "lo"), "lo");
  int hi = small_int(field(j, "hi"), "hi");
  std::map<int, FinAbGroup> terms;
  const Json& tj = field(j, "terms");
  if (!tj.is_object()) throw InvalidInput("terms must be an object keyed by index");
  for (const auto& [key, value] : tj.items()) terms[key_to_int(key)] = group_from_json(value);
  auto term = [&](int i) {
    auto it = terms.find(i);
    return it == terms.end() ? FinAbGroup() : it->second;
  };
  std::map<int, GroupHom> maps;
  auto mit = j.find("maps");
  if (mit != j.end()) {
    if (!mit->is_object()) throw InvalidInput("maps must be an object keyed by index");
    for (const auto& [key, value] : mit->items()) {
      int i = key_to_int(key);
      maps.emplace(i, GroupHom(term(i), term(i + 1), matrix_from_json(value)));
    }
  }
  return ExactSequence(lo, hi, std::move(terms), std::move(maps));
}

Json to_json(const SteinInstance& inst) {
  Json out{{"n", inst.n()},
           {"p", inst.p()},
           {"orientable", inst.orientable()},
           {"coefficients", inst.coefficients().to_string()},
           {"wf_homology", to_json(inst.wf_homology())}};
  out["m_homology"] = inst.m_homology() ? to_json(*inst.m_homology()) : Json(nullptr);
  return out;
}

SteinInstance stein_instance_from_json(const Json& j) {
  int n = small_int(field(j, "n"), "n");
  int p = small_int(field(j, "p"), "p");
  GradedGroup wf = graded_group_from_json(field(j, "wf_homology"));
  std::optional<GradedGroup> m;
  auto it = j.find("m_homology");
  if (it != j.end() && !it->is_null()) m = graded_group_from_json(*it);
  return SteinInstance(n, p, std::move(wf), std::move(m), field_bool(j, "orientable", true),
                       coefficients_field(j));
}

Json to_json(const DimensionSetVerdict& v) {
  Json statuses = Json::object();
  for (const auto& [p, st] : v.statuses) {
    statuses[std::to_string(p)] =
        Json{{"status", to_string(st.status)}, {"reason", to_string(st.reason)}, {"note", st.note}};
  }
  Json out{{"dimension", v.dimension}, {"statuses", std::move(statuses)}};
  if (v.summary) {
    Json s = Json::array();
    for (int p : *v.summary) s.push_back(p);
    out["summary"] = std::move(s);
  } else {
    out["summary"] = nullptr;
  }
  return out;
}

DimensionSetVerdict verdict_from_json(const Json& j) {
  DimensionSetVerdict v;
  v.dimension = small_int(field(j, "dimension"), "dimension");
  const Json& sj = field(j, "statuses");
  if (!sj.is_object()) throw InvalidInput("statuses must be an object keyed by p");
  for (const auto& [key, value] : sj.items()) {
    TargetStatus st;
    st.status = parse_status(field(value, "status").get<std::string>());
    st.reason = parse_reason(field(value, "reason").get<std::string>());
    if (auto it = value.find("note"); it != value.end() && it->is_string())
      st.note = it->get<std::string>();
    v.statuses[key_to_int(key)] = std::move(st);
  }
  const Json& summary = field(j, "summary");
  if (!summary.is_null()) {
    std::set<int> s;
    for (const auto& p : summary) s.insert(small_int(p, "summary entry"));
    v.summary = std::move(s);
  }
  return v;
}

Json to_json(const SnfResult& snf) {
  Json diag = Json::array();
  for (const auto& d : snf.diagonal()) diag.push_back(to_json(d));
  return Json{{"U", to_json(snf.U)}, {"S", to_json(snf.S)}, {"V", to_json(snf.V)},
              {"diagonal", std::move(diag)}, {"rank", snf.rank()}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace sgmtopo::json
