#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgmtopo/cli.hpp"
#include "sgmtopo/dimension_set.hpp"
#include "sgmtopo/errors.hpp"
#include "sgmtopo/json_io.hpp"

namespace py = pybind11;
using namespace sgmtopo;

namespace pybind11::detail {

// Python int <-> mpz_class through decimal strings.
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

IntMatrix to_matrix(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  return IntMatrix::from_rows(rows, cols);
}

std::vector<std::vector<Integer>> from_matrix(const IntMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

py::dict verdict_dict(const DimensionSetVerdict& v) {
  py::dict statuses;
  for (const auto& [p, st] : v.statuses)
    statuses[py::int_(p)] = py::make_tuple(to_string(st.status), to_string(st.reason), st.note);
  py::dict out;
  out["dimension"] = v.dimension;
  out["statuses"] = statuses;
  if (v.summary)
    out["summary"] = py::cast(*v.summary);
  else
    out["summary"] = py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact homology and special generic map obstructions";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);

  py::class_<FinAbGroup>(m, "FinAbGroup")
      .def(py::init([](std::size_t rank, std::vector<Integer> torsion) {
             return FinAbGroup::canonicalize(rank, std::move(torsion));
           }),
           py::arg("rank") = 0, py::arg("torsion") = std::vector<Integer>{})
      .def_static("cyclic", &FinAbGroup::cyclic)
      .def_property_readonly("rank", &FinAbGroup::rank)
      .def_property_readonly("invariant_factors", &FinAbGroup::invariant_factors)
      .def_property_readonly("is_finite", &FinAbGroup::is_finite)
      .def("order", [](const FinAbGroup& g) { return order(g); })
      .def("__eq__", [](const FinAbGroup& a, const FinAbGroup& b) { return a == b; })
      .def("__hash__", [](const FinAbGroup& g) { return py::hash(py::str(g.to_string())); })
      .def("__str__", &FinAbGroup::to_string)
      .def("__repr__", [](const FinAbGroup& g) { return "FinAbGroup(" + g.to_string() + ")"; });

  m.def("primary_decomposition", &primary_decomposition);
  m.def("is_double", &is_double);
  m.def("wall_alternatives", [](const FinAbGroup& t) {
    std::vector<std::string> shapes;
    for (auto s : wall_alternatives(t).shapes) shapes.push_back(to_string(s));
    return shapes;
  });
  m.def("enumerate_extensions", &enumerate_extensions, py::arg("sub"), py::arg("quotient"),
        py::arg("bound") = kDefaultEnumerationBound);

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
        auto r = smith_normal_form(to_matrix(rows, cols));
        return py::make_tuple(from_matrix(r.U), from_matrix(r.S), from_matrix(r.V), r.diagonal());
      },
      py::arg("rows"), py::arg("cols") = 0, "Returns (U, S, V, diagonal) with U*A*V = S.");
  m.def("cokernel", [](const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    return cokernel(to_matrix(rows, cols));
  }, py::arg("rows"), py::arg("cols") = 0);
  m.def("determinant", [](const std::vector<std::vector<Integer>>& rows) {
    return determinant(to_matrix(rows, 0));
  });

  m.def(
      "homology",
      [](const std::string& complex_json, const std::string& coeff) {
        auto c = json::chain_complex_from_json(json::parse(complex_json));
        auto h = homology(c, Coefficients::parse(coeff));
        std::vector<FinAbGroup> out;
        for (int d = 0; d <= h.top_degree(); ++d) out.push_back(h.at(d));
        return out;
      },
      py::arg("complex_json"), py::arg("coeff") = "Z");
  m.def("lens_homology", [](const Integer& mm, std::vector<Integer> l) {
    auto h = lens_homology(LensSpec(mm, std::move(l)));
    std::vector<FinAbGroup> out;
    for (int d = 0; d <= h.top_degree(); ++d) out.push_back(h.at(d));
    return out;
  });
  m.def("lens_cw_homology", [](const Integer& mm, int k) {
    auto h = homology(lens_chain_complex(mm, k), Coefficients::integers());
    std::vector<FinAbGroup> out;
    for (int d = 0; d <= h.top_degree(); ++d) out.push_back(h.at(d));
    return out;
  });

  m.def("perfect_square", &perfect_square);
  m.def(
      "lens_dimension_set",
      [](const Integer& mm, std::vector<Integer> l, std::optional<bool> sp) {
        return verdict_dict(lens_dimension_set(LensSpec(mm, std::move(l)), sp));
      },
      py::arg("m"), py::arg("l"), py::arg("stably_parallelizable") = py::none());
  m.def("bundle_dimension_set", [](const Integer& mm, const Integer& n) {
    return verdict_dict(bundle_dimension_set(BundleSpec(mm, n)));
  });
  m.def("classify", [](const std::string& name) { return verdict_dict(classify(catalog_lookup(name))); });
  m.def("square_obstruction", [](const std::string& name) {
    auto e = catalog_lookup(name);
    return to_string(square_obstruction(e.homology, e.dimension, e.orientable).outcome);
  });

  m.def("realization_parameters", [](const Integer& mm) {
    auto p = realization_parameters(mm);
    py::dict d;
    d["k"] = p.k;
    d["p"] = p.p;
    d["n"] = p.n;
    d["a"] = p.a;
    d["r"] = p.r;
    d["w"] = p.w_description;
    d["open_question"] = p.open_question ? py::cast(*p.open_question) : py::none();
    return d;
  });
  m.def("realization_candidates", &realization_candidates, py::arg("m"),
        py::arg("bound") = kDefaultEnumerationBound);
  m.def("realization_square_order", [](const Integer& mm) {
    auto inst = realization_instance(mm);
    auto cert = lemma_square_order(prop42_sequence(inst, realization_parameters(mm).k));
    return py::make_tuple(cert.k, cert.a0);
  });
  m.def("random_symmetric_lemma", [](std::uint64_t seed, int reach, long bound) {
    auto seq = splice_symmetric(seed, reach, bound);
    auto cert = lemma_square_order(seq);
    auto prod = alternating_order_identity(seq);
    return py::make_tuple(cert.k, cert.a0, prod.odd, prod.even);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
