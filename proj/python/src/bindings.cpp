#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invtopos/cosets_filters.hpp"
#include "invtopos/finite_bundles.hpp"
#include "invtopos/fixtures.hpp"
#include "invtopos/json_io.hpp"
#include "invtopos/phi_psi.hpp"
#include "invtopos/presheaf_tensor.hpp"
#include "invtopos/random_gen.hpp"
#include "invtopos/suite.hpp"

namespace py = pybind11;
using namespace invtopos;

namespace {

py::object witness_to_py(std::optional<Witness> const& w) {
  if (!w) {
    return py::none();
  }
  py::dict out;
  out["code"] = w->code;
  out["parts"] = w->parts;
  out["detail"] = w->detail;
  return out;
}

py::dict verdict_to_py(Verdict const& v) {
  py::dict out;
  out["holds"] = v.value;
  out["witness"] = witness_to_py(v.witness);
  return out;
}

std::vector<std::string> set_names(InverseSemigroup const& s, ElementSet const& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) {
    out.push_back(s.name(x));
  }
  return out;
}

ElementSet set_of_names(InverseSemigroup const& s,
                        std::vector<std::string> const& names) {
  ElementSet out;
  out.reserve(names.size());
  for (auto const& n : names) {
    auto idx = s.index(n);
    if (!idx) {
      fail({"UnknownElement", {n}, ""});
    }
    out.push_back(*idx);
  }
  return sorted_set(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_invtopos, m) {
  m.doc() = "finite inverse semigroup actions vs functors on Loganathan's category";

  py::register_exception<ValidationError>(m, "ValidationError");

  py::class_<InverseSemigroup, std::shared_ptr<InverseSemigroup>>(m, "InverseSemigroup")
      .def_static(
          "from_json",
          [](std::string const& text) {
            return std::const_pointer_cast<InverseSemigroup>(
                io::semigroup_from_json(io::json::parse(text)));
          },
          py::arg("text"))
      .def_property_readonly("elements", &InverseSemigroup::names)
      .def("__len__", &InverseSemigroup::size)
      .def("mul",
           [](InverseSemigroup const& s, std::string const& a, std::string const& b) {
             return s.name(s.mul(*s.index(a), *s.index(b)));
           })
      .def("inv",
           [](InverseSemigroup const& s, std::string const& a) {
             return s.name(s.inv(*s.index(a)));
           })
      .def("idempotents",
           [](InverseSemigroup const& s) { return set_names(s, s.idempotents()); })
      .def("natural_leq",
           [](InverseSemigroup const& s, std::string const& a, std::string const& b) {
             return s.natural_leq(*s.index(a), *s.index(b));
           })
      .def("up_closure",
           [](InverseSemigroup const& s, std::vector<std::string> const& xs) {
             return set_names(s, s.up_closure(set_of_names(s, xs)));
           })
      .def("h_class",
           [](InverseSemigroup const& s, std::string const& e, std::string const& f) {
             return set_names(s, s.h_class(*s.index(e), *s.index(f)));
           })
      .def("to_json", [](InverseSemigroup const& s) {
        return io::semigroup_to_json(s).dump(2);
      });

  py::class_<PartialAction>(m, "PartialAction")
      .def_static(
          "from_json",
          [](std::string const& text) {
            return io::action_from_json(io::json::parse(text));
          },
          py::arg("text"))
      .def_property_readonly("carrier", &PartialAction::carrier)
      .def_property_readonly("semigroup",
                             [](PartialAction const& a) {
                               return std::const_pointer_cast<InverseSemigroup>(
                                   a.sgp_ptr());
                             })
      .def("apply",
           [](PartialAction const& a, std::string const& s,
              std::string const& x) -> py::object {
             auto si = a.sgp().index(s);
             auto xi = a.point_index(x);
             if (!si || !xi) {
               fail({"UnknownElement", {s, x}, ""});
             }
             int const y = a.apply(*si, *xi);
             return y < 0 ? py::none() : py::cast(a.point_name(y));
           })
      .def("is_strict", [](PartialAction const& a) { return verdict_to_py(is_strict(a)); })
      .def("is_connected",
           [](PartialAction const& a) { return verdict_to_py(is_connected(a)); })
      .def("is_transitive",
           [](PartialAction const& a) { return verdict_to_py(is_transitive(a)); })
      .def("is_free", [](PartialAction const& a) { return verdict_to_py(is_free(a)); })
      .def("is_torsor", [](PartialAction const& a) { return is_torsor(a); })
      .def("is_universal", [](PartialAction const& a) { return is_universal(a); })
      .def("stabilizer",
           [](PartialAction const& a, std::string const& x) {
             auto xi = a.point_index(x);
             if (!xi) {
               fail({"UnknownPoint", {x}, ""});
             }
             return set_names(a.sgp(), stabilizer(a, *xi));
           })
      .def("to_json", [](PartialAction const& a) {
        return io::action_to_json(a).dump(2);
      });

  py::class_<SetFunctor>(m, "SetFunctor")
      .def_static(
          "from_json",
          [](std::string const& text) {
            return io::functor_from_json(io::json::parse(text));
          },
          py::arg("text"))
      .def("is_torsion_free",
           [](SetFunctor const& f) { return verdict_to_py(is_torsion_free(f)); })
      .def("is_directed", [](SetFunctor const& f) { return verdict_to_py(is_directed(f)); })
      .def("is_filtered", [](SetFunctor const& f) { return verdict_to_py(is_filtered(f)); })
      .def("preserves_pullbacks",
           [](SetFunctor const& f) { return preserves_pullbacks(f); })
      .def("total_size", &SetFunctor::total_size)
      .def("to_json", [](SetFunctor const& f) {
        return io::functor_to_json(f).dump(2);
      });

  m.def("fixture_semigroup", [](std::string const& name) {
    return std::const_pointer_cast<InverseSemigroup>(fixtures::semigroup_by_name(name));
  });
  m.def("fixture_action", &fixtures::action_by_name);
  m.def("fixture_semigroup_names", &fixtures::semigroup_names);
  m.def("fixture_action_names", &fixtures::action_names);

  m.def("logan_summary", [](std::shared_ptr<InverseSemigroup> const& s) {
    auto logan = build_logan(s);
    py::dict out;
    out["objects"] = logan->object_count();
    out["arrows"] = logan->arrow_count();
    return out;
  });

  m.def("phi", [](PartialAction const& a) { return phi(a); });
  m.def("psi", [](SetFunctor const& f) { return psi(f); });
  m.def("beta_counit", [](PartialAction const& a) {
    auto beta = counit_beta(a);
    py::dict out;
    out["source_carrier"] = beta.source.carrier();
    std::vector<std::string> image;
    for (int v : beta.map) {
      image.push_back(beta.target.point_name(v));
    }
    out["map"] = image;
    return out;
  });

  m.def("closed_inverse_subsemigroups",
        [](std::shared_ptr<InverseSemigroup> const& s) {
          std::vector<std::vector<std::string>> out;
          for (auto const& h : enumerate_closed_subsemigroups(*s)) {
            out.push_back(set_names(*s, h));
          }
          return out;
        });
  m.def("coset_action",
        [](std::shared_ptr<InverseSemigroup> const& s,
           std::vector<std::string> const& members) {
          return coset_action(s, set_of_names(*s, members));
        });
  m.def("schein_decompose", [](PartialAction const& a) {
    auto dec = schein_decompose(a);
    py::dict out;
    out["stabilizer"] = set_names(a.sgp(), dec.h);
    out["cosets"] = dec.cosets.carrier();
    std::vector<std::string> iso;
    for (int v : dec.iso.map) {
      iso.push_back(dec.cosets.point_name(v));
    }
    out["isomorphism"] = iso;
    return out;
  });
  m.def("filters_in_e", [](std::shared_ptr<InverseSemigroup> const& s) {
    std::vector<std::vector<std::string>> out;
    for (auto const& f : enumerate_filters_in_e(*s)) {
      out.push_back(set_names(*s, f));
    }
    return out;
  });
  m.def("filters_in_s", [](std::shared_ptr<InverseSemigroup> const& s) {
    std::vector<std::vector<std::string>> out;
    for (auto const& f : enumerate_filters_in_s(*s)) {
      out.push_back(set_names(*s, f));
    }
    return out;
  });

  m.def("tensor_with_representable",
        [](SetFunctor const& f, std::string const& e) {
          auto ei = f.logan().sgp().index(e);
          if (!ei) {
            fail({"UnknownElement", {e}, ""});
          }
          auto t = tensor(representable(f.logan_ptr(), *ei), f);
          return t.labels;
        });
  m.def("flatness_spotcheck", [](SetFunctor const& f) {
    auto report = flatness_spotcheck(f);
    py::dict out;
    out["filtered"] = report.filtered;
    out["all_preserved"] = report.all_preserved();
    out["failures"] = report.failures();
    return out;
  });

  m.def("random_action", [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RandomConfig cfg;
    return random_action(rng, cfg);
  });

  m.def(
      "run_suite",
      [](std::uint64_t seed, bool fixtures_only, int random_instances) {
        suite::Options options;
        options.seed = seed;
        options.fixtures_only = fixtures_only;
        options.random_instances = random_instances;
        auto report = suite::run(options);
        py::list criteria;
        for (auto const& c : report.criteria) {
          py::dict entry;
          entry["id"] = c.id;
          entry["name"] = c.name;
          entry["pass"] = c.pass;
          entry["checks"] = c.checks;
          entry["failures"] = c.failures;
          criteria.append(entry);
        }
        py::dict out;
        out["all_pass"] = report.all_pass();
        out["criteria"] = criteria;
        return out;
      },
      py::arg("seed") = 7, py::arg("fixtures_only") = false,
      py::arg("random_instances") = 120);
}
