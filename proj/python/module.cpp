#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bordercert/certify.hpp"

namespace py = pybind11;
using namespace bordercert;

namespace {

std::shared_ptr<const OrderIdealData> make_oid(const std::string& sig) {
  return std::make_shared<const OrderIdealData>(build_order_ideal(parse_signature(sig)));
}

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Border bases of signature (n,r,s,delta,w)";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<OrderIdealData, std::shared_ptr<OrderIdealData>>(m, "OrderIdeal")
      .def(py::init([](const std::string& sig) {
             return std::make_shared<OrderIdealData>(build_order_ideal(parse_signature(sig)));
           }),
           py::arg("signature"))
      .def_property_readonly("signature",
                             [](const OrderIdealData& o) { return o.signature.to_string(); })
      .def_readonly("mu", &OrderIdealData::mu)
      .def_readonly("nu", &OrderIdealData::nu)
      .def_readonly("hilbert", &OrderIdealData::hilbert)
      .def_readonly("gamma", &OrderIdealData::gamma)
      .def_readonly("ell", &OrderIdealData::ell)
      .def_readonly("tau", &OrderIdealData::tau)
      .def_property_readonly("basis", [](const OrderIdealData& o) { return strings(o.basis); })
      .def_property_readonly("border", [](const OrderIdealData& o) { return strings(o.border); })
      .def_property_readonly("s_l", [](const OrderIdealData& o) { return strings(o.s_l); })
      .def_property_readonly("s_d", [](const OrderIdealData& o) { return strings(o.s_d); })
      .def_property_readonly("dim_u", [](const OrderIdealData& o) { return dim_U(o); });

  m.def("shape_to_signature", [](int n, int kappa, int r, int s) {
    return shape_to_signature(n, kappa, r, s).to_string();
  });
  m.def("gamma_formula", [](const std::string& sig) { return gamma_formula(parse_signature(sig)); });
  m.def("inspect_json", [](const std::string& sig) { return inspect_json(*make_oid(sig)); });
  m.def("modify", [](const std::string& sig) {
    auto oid = make_oid(sig);
    return dump_targets(*oid, build_generic_modification(oid).targets);
  });
  m.def(
      "tangent_dimension",
      [](const std::string& sig, std::uint64_t seed, const std::string& field, std::uint64_t prime) {
        auto oid = make_oid(sig);
        const auto gm = build_generic_modification(oid);
        const auto point = random_point(*gm.registry, seed);
        py::gil_scoped_release release;
        if (parse_field(field) == FieldMode::Exact)
          return exact_tangent_dimension(gm, point, prime).dimension;
        return tangent_dimension(specialize_system_mod(gm.system, point, prime));
      },
      py::arg("signature"), py::arg("seed") = 1, py::arg("field") = "exact",
      py::arg("prime") = Fp::kDefaultPrime);
  m.def(
      "certify_json",
      [](const std::string& sig, int trials, std::uint64_t seed, const std::string& field,
         std::uint64_t prime, bool timings) {
        CertifyOptions o;
        o.trials = trials;
        o.seed = seed;
        o.field = parse_field(field);
        o.prime = prime;
        py::gil_scoped_release release;
        return report_json(certify(parse_signature(sig), o), timings);
      },
      py::arg("signature"), py::arg("trials") = 3, py::arg("seed") = 1,
      py::arg("field") = "exact", py::arg("prime") = Fp::kDefaultPrime,
      py::arg("timings") = true);
  m.attr("__version__") = BORDERCERT_VERSION;
}
