#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "nilcover/catalog.hpp"
#include "nilcover/constructions.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/pair_graph.hpp"
#include "nilcover/report.hpp"
#include "nilcover/structure.hpp"
#include "nilcover/verification.hpp"

namespace py = pybind11;
using namespace nilcover;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::null:
      return py::none();
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return std::move(out);
    }
    case nlohmann::ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return std::move(out);
    }
    default:
      throw std::runtime_error("unsupported JSON value");
  }
}

struct Limits {
  PairGraphLimits graph;
  CliqueOptions clique;
};

Limits make_limits(std::size_t nilpotent_cap, std::size_t abelian_cap, double timeout) {
  Limits l;
  l.graph.nilpotent_cap = nilpotent_cap;
  l.graph.abelian_cap = abelian_cap;
  l.clique.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(timeout * 1000));
  return l;
}

std::vector<Index> indices_of(const FiniteGroup& g, const std::vector<std::string>& cycles) {
  std::vector<Index> out;
  for (const auto& c : cycles) out.push_back(g.index_of(parse_cycles(c, g.degree())));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pair graphs, clique numbers and witnesses for finite permutation groups";

  auto base = py::register_exception<Error>(m, "NilcoverError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ClosureCapExceeded>(m, "ClosureCapExceeded", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<Timeout>(m, "Timeout", base.ptr());
  py::register_exception<ElementNotInGroup>(m, "ElementNotInGroup", base.ptr());
  py::register_exception<ConstructionFailure>(m, "ConstructionFailure", base.ptr());

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_property_readonly("label", &FiniteGroup::label)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("degree", &FiniteGroup::degree)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.label() + " of order " + std::to_string(g.order()) + ">"; })
      .def("elements", [](const FiniteGroup& g) {
        std::vector<std::string> out;
        for (Index i = 0; i < g.order(); ++i) out.push_back(format_cycles(g.element(i)));
        return out;
      })
      .def("element_order", [](const FiniteGroup& g, const std::string& x) {
        return g.element_order(g.index_of(parse_cycles(x, g.degree())));
      }, py::arg("element"));

  m.def("build", [](const std::string& spec, std::size_t cap) {
    return std::const_pointer_cast<FiniteGroup>(catalog::build(spec, catalog::BuildOptions{cap}));
  }, py::arg("spec"), py::arg("cap") = kDefaultClosureCap);

  m.def("clique_number", [](const FiniteGroup& g, const std::string& kind, std::size_t nilpotent_cap,
                            std::size_t abelian_cap, double timeout) {
    const auto l = make_limits(nilpotent_cap, abelian_cap, timeout);
    CliqueNumber c;
    {
      py::gil_scoped_release release;
      c = clique_number(build_graph(g, parse_class_kind(kind), l.graph), l.clique);
    }
    py::dict out;
    out["omega"] = c.omega;
    out["exact"] = c.exact;
    out["witness"] = to_python(to_json(c.witness));
    return out;
  }, py::arg("group"), py::arg("kind") = "nilpotent", py::arg("nilpotent_cap") = 600, py::arg("abelian_cap") = 1200,
        py::arg("timeout") = 60.0);

  m.def("check_condition", [](const FiniteGroup& g, const std::string& kind, std::size_t n, std::size_t nilpotent_cap,
                              std::size_t abelian_cap, double timeout) {
    const auto l = make_limits(nilpotent_cap, abelian_cap, timeout);
    ConditionResult r;
    {
      py::gil_scoped_release release;
      r = check_condition(build_graph(g, parse_class_kind(kind), l.graph), n, l.clique);
    }
    py::dict out;
    out["satisfied"] = r.satisfied;
    out["violation"] = r.satisfied ? py::object(py::none()) : to_python(to_json(r.violation));
    return out;
  }, py::arg("group"), py::arg("kind"), py::arg("n"), py::arg("nilpotent_cap") = 600, py::arg("abelian_cap") = 1200,
        py::arg("timeout") = 60.0);

  m.def("verify_witness", [](const FiniteGroup& g, const std::string& kind, const std::vector<std::string>& elements) {
    return to_python(to_json(verify_witness(g, parse_class_kind(kind), elements)));
  }, py::arg("group"), py::arg("kind"), py::arg("elements"));

  m.def("classify_pair", [](const FiniteGroup& g, const std::string& x, const std::string& y, const std::string& kind) {
    const auto ids = indices_of(g, {x, y});
    return classify_pair(g, ids[0], ids[1], parse_class_kind(kind));
  }, py::arg("group"), py::arg("x"), py::arg("y"), py::arg("kind"));

  m.def("sylow", [](const FiniteGroup& g, unsigned p) { return to_python(to_json(sylow(g, p))); },
        py::arg("group"), py::arg("p"));

  m.def("analyze", [](const FiniteGroup& g, bool with_sylow) {
    std::optional<StructureReport> r;
    {
      py::gil_scoped_release release;
      r.emplace(analyze_structure(g, with_sylow));
    }
    return to_python(to_json(*r));
  }, py::arg("group"), py::arg("sylow") = true);

  m.def("a5_sylow_witness", [](const FiniteGroup& g) {
    return to_python(to_json(verify_witness(g, ClassKind::Nilpotent, a5_sylow_witness(g))));
  }, py::arg("group"));

  m.def("s5_witness", [](const FiniteGroup& g) { return to_python(to_json(s5_witness(g))); }, py::arg("group"));

  m.def("sl25_witness", [](const FiniteGroup& g) {
    return to_python(to_json(verify_witness(g, ClassKind::Abelian, sl25_witness(g))));
  }, py::arg("group"));

  m.def("to_dot", [](const FiniteGroup& g, const std::string& kind, bool include_isolated) {
    return to_dot(build_graph(g, parse_class_kind(kind)), include_isolated);
  }, py::arg("group"), py::arg("kind"), py::arg("include_isolated") = false);

  m.def("check_ids", [] {
    std::vector<std::string> out;
    for (const auto& c : verification::checks()) out.push_back(c.id);
    return out;
  });

  m.def("verify_paper", [](const std::vector<std::string>& only, bool parallel) {
    std::vector<verification::CheckResult> results;
    {
      py::gil_scoped_release release;
      results = verification::run_checks(only, verification::Settings{}, parallel);
    }
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["status"] = std::string(verification::to_string(r.status));
      d["details"] = r.details;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  }, py::arg("only") = std::vector<std::string>{}, py::arg("parallel") = false);
}
