#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/report.hpp"
#include "ringlab/sweep.hpp"

namespace py = pybind11;
using namespace ringlab;

namespace {

Limits limits_of(std::size_t order_cap, std::size_t enumeration_cap) {
  Limits l;
  l.order_cap = order_cap;
  l.enumeration_cap = enumeration_cap;
  return l;
}

std::vector<std::vector<Index>> members_of(const std::vector<IdealSet>& ideals) {
  std::vector<std::vector<Index>> out;
  out.reserve(ideals.size());
  for (const auto& i : ideals) out.push_back(i.members());
  return out;
}

MethodSelection method_of(const std::string& m) {
  if (m == "brute") return MethodSelection::Definitional;
  if (m == "criterion") return MethodSelection::Criterion;
  if (m == "both") return MethodSelection::Both;
  throw std::invalid_argument("method must be brute, criterion or both");
}

py::dict match_dict(const ConditionMatch& m) {
  py::dict d;
  d["holds"] = m.holds;
  d["condition"] = m.condition;
  d["matched"] = m.matched;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ringlab, m) {
  m.doc() = "Finite commutative rings as Cayley tables: radicals, group rings, nil-clean classes";
  m.attr("__version__") = RINGLAB_VERSION;

  static py::exception<CapExceeded> cap_exc(m, "CapExceeded", PyExc_RuntimeError);
  static py::exception<InternalDisagreement> dis_exc(m, "InternalDisagreement", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      cap_exc(e.what());
    } catch (const InternalDisagreement& e) {
      dis_exc(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Ring>(m, "Ring")
      .def_property_readonly("order", &Ring::order)
      .def_property_readonly("label", &Ring::label)
      .def_property_readonly("zero", &Ring::zero)
      .def_property_readonly("one", &Ring::one)
      .def("add", &Ring::add)
      .def("mul", &Ring::mul)
      .def("neg", &Ring::neg)
      .def("add_table", &Ring::add_table)
      .def("mul_table", &Ring::mul_table)
      .def("characteristic", [](const Ring& r) { return characteristic(r); })
      .def("element_classes",
           [](const Ring& r) {
             const auto c = element_classes(r);
             py::dict d;
             d["nilpotents"] = c.nilpotents.members();
             d["idempotents"] = c.idempotents.members();
             d["units"] = c.units.members();
             return d;
           })
      .def("__len__", &Ring::order)
      .def("__repr__", [](const Ring& r) { return "<Ring " + r.label() + ">"; });

  m.def("zmod", [](std::size_t n) { return make_zmod(n); }, py::arg("n"));
  m.def("direct_product", [](const Ring& a, const Ring& b) { return direct_product(a, b); });
  m.def(
      "parse",
      [](const std::string& text, std::size_t order_cap) {
        return evaluate(parse_ring_expr(text), limits_of(order_cap, 1024));
      },
      py::arg("expr"), py::arg("order_cap") = 4096, "Evaluate a ring expression such as \"GR(Z3, C2)\".");
  m.def("canonical", [](const std::string& text) { return to_string(parse_ring_expr(text)); });
  m.def(
      "group_ring",
      [](const Ring& r, const std::vector<std::size_t>& orders, std::size_t order_cap) {
        return group_ring(r, make_group(orders), limits_of(order_cap, 1024)).ring;
      },
      py::arg("ring"), py::arg("group"), py::arg("order_cap") = 4096);
  m.def("abelian_groups", [](std::size_t order) {
    std::vector<std::string> out;
    for (const auto& g : abelian_groups_of_order(order)) out.push_back(g.label());
    return out;
  });

  m.def("validate_axioms",
        [](std::size_t order, std::vector<Index> add, std::vector<Index> mul, Index zero, Index one) {
          RingTables t{order, std::move(add), std::move(mul), zero, one, ""};
          std::vector<std::pair<std::string, std::vector<Index>>> out;
          for (const auto& v : validate_ring_axioms(t).violations) out.emplace_back(v.axiom, v.witness);
          return out;
        },
        py::arg("order"), py::arg("add"), py::arg("mul"), py::arg("zero") = 0, py::arg("one") = 1);

  m.def(
      "ideals",
      [](const Ring& r, std::size_t enumeration_cap) {
        return members_of(enumerate_ideals(r, limits_of(4096, enumeration_cap)));
      },
      py::arg("ring"), py::arg("enumeration_cap") = 1024);
  m.def("maximal_ideals", [](const Ring& r) { return members_of(maximal_ideals(r)); });
  m.def("nilradical", [](const Ring& r) { return nilradical(r).members(); });
  m.def("jacobson_radical", [](const Ring& r) { return jacobson_radical(r).members(); });
  m.def("quotient", [](const Ring& r, const std::vector<Index>& gens) {
    return quotient_ring(r, ideal_generated(r, gens)).ring;
  });
  m.def(
      "karpilovsky_radical",
      [](const Ring& r, const std::vector<std::size_t>& orders, std::size_t order_cap) {
        return karpilovsky_radical(group_ring(r, make_group(orders), limits_of(order_cap, 1024)))
            .members();
      },
      py::arg("ring"), py::arg("group"), py::arg("order_cap") = 4096);

  m.def("is_nil_clean", [](const Ring& r) { return is_nil_clean_definitional(r).holds; });
  m.def("is_weakly_nil_clean", [](const Ring& r) { return is_weakly_nil_clean_definitional(r).holds; });
  m.def("is_nil_neat", [](const Ring& r) { return is_nil_neat_definitional(r).holds; });
  m.def("is_weakly_nil_neat", [](const Ring& r) { return is_weakly_nil_neat_definitional(r).holds; });
  m.def("structure", [](const Ring& r) { return to_string(recognize_structure(r).tag); });
  m.def("isomorphic", [](const Ring& a, const Ring& b) { return ring_isomorphic(a, b).isomorphic; });

  m.def("weakly_nil_neat_group_ring", [](const Ring& r, const std::vector<std::size_t>& orders) {
    return match_dict(weakly_nil_neat_group_ring_predicate(r, make_group(orders)));
  });
  m.def("weakly_nil_clean_group_ring", [](const Ring& r, const std::vector<std::size_t>& orders) {
    return match_dict(weakly_nil_clean_group_ring_predicate(r, make_group(orders)));
  });

  m.def(
      "_classify_json",
      [](const std::string& expr, const std::string& method, std::size_t order_cap,
         std::size_t enumeration_cap) {
        const auto outcome = classify_expr(parse_ring_expr(expr), method_of(method),
                                           limits_of(order_cap, enumeration_cap));
        return to_json(outcome).dump();
      },
      py::arg("expr"), py::arg("method") = "both", py::arg("order_cap") = 4096,
      py::arg("enumeration_cap") = 1024);
  m.def(
      "_radical_json",
      [](const std::string& expr, std::size_t order_cap) {
        return to_json(radical_expr(parse_ring_expr(expr), limits_of(order_cap, 1024))).dump();
      },
      py::arg("expr"), py::arg("order_cap") = 4096);
  m.def(
      "_sweep_jsonl",
      [](std::size_t max_ring_order, std::size_t max_product_order, std::size_t max_group_order,
         std::size_t max_groupring_order, std::size_t jobs) {
        SweepConfig config;
        config.max_ring_order = max_ring_order;
        config.max_product_order = max_product_order;
        config.max_group_order = max_group_order;
        config.max_groupring_order = max_groupring_order;
        config.jobs = jobs;
        config.record_timing = false;
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = run_sweep(config);
        }
        std::ostringstream out;
        write_jsonl(report, out);
        return out.str();
      },
      py::arg("max_ring_order") = 9, py::arg("max_product_order") = 12,
      py::arg("max_group_order") = 4, py::arg("max_groupring_order") = 1024, py::arg("jobs") = 1);
}
