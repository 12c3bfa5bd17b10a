#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latcon/catalog.hpp"
#include "latcon/construction.hpp"
#include "latcon/error.hpp"
#include "latcon/io.hpp"
#include "latcon/render.hpp"
#include "latcon/verify.hpp"

namespace py = pybind11;
using namespace latcon;

namespace {

  py::object to_python(json const& j) {
    return py::module_::import("json").attr("loads")(j.dump());
  }

  json from_python(py::object const& o) {
    return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
  }

  BoundedHom pick_hom(RectLattice const& F, RectLattice const& G, py::object const& phi) {
    auto D = congruence_lattice(F.lattice).lattice();
    auto E = congruence_lattice(G.lattice).lattice();
    if (py::isinstance<py::int_>(phi)) {
      auto homs = bounded_homs(D, E);
      auto k    = phi.cast<std::size_t>();
      if (k >= homs.size()) {
        throw py::index_error("hom index " + std::to_string(k) + " of "
                              + std::to_string(homs.size()));
      }
      return homs[k];
    }
    return make_bounded_hom(D, E, phi.cast<std::vector<Element>>());
  }

  py::dict construction(ConstructionReport const& rep, VerificationReport const& v) {
    py::dict d;
    d["lattice"]      = py::cast(rep.output);
    d["construction"] = to_python(to_json(rep));
    d["report"]       = to_python(to_json(v));
    d["passed"]       = v.summary();
    return d;
  }

  Element checked(FiniteLattice const& L, Element x) {
    L.check(x);
    return x;
  }

}  // namespace

PYBIND11_MODULE(latcon, m) {
  m.doc() = "Congruence lattices of finite and rectangular lattices";

  static py::exception<Error> error(m, "LatconError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      error(e.what());
    }
  });

  py::class_<FiniteLattice>(m, "Lattice")
      .def_property_readonly("size", &FiniteLattice::size)
      .def_property_readonly("bottom", &FiniteLattice::bottom)
      .def_property_readonly("top", &FiniteLattice::top)
      .def("covers",
           [](FiniteLattice const& L) {
             std::vector<std::pair<Element, Element>> out;
             for (auto const& c : L.covers()) {
               out.emplace_back(c.lower, c.upper);
             }
             return out;
           })
      .def("upper_covers", [](FiniteLattice const& L, Element x) { return L.upper_covers(checked(L, x)); })
      .def("lower_covers", [](FiniteLattice const& L, Element x) { return L.lower_covers(checked(L, x)); })
      .def("leq", [](FiniteLattice const& L, Element x, Element y) { return L.leq(checked(L, x), checked(L, y)); })
      .def("meet", [](FiniteLattice const& L, Element x, Element y) { return L.meet(checked(L, x), checked(L, y)); })
      .def("join", [](FiniteLattice const& L, Element x, Element y) { return L.join(checked(L, x), checked(L, y)); })
      .def("to_json", [](FiniteLattice const& L) { return to_python(to_json(L)); })
      .def("__len__", &FiniteLattice::size)
      .def("__eq__", [](FiniteLattice const& a, FiniteLattice const& b) { return a == b; });

  py::class_<RectLattice>(m, "RectLattice")
      .def_readonly("lattice", &RectLattice::lattice)
      .def_readonly("left_corner", &RectLattice::lc)
      .def_readonly("right_corner", &RectLattice::rc)
      .def_readonly("eyes", &RectLattice::eyes)
      .def_readonly("lower_left", &RectLattice::lower_left)
      .def_readonly("lower_right", &RectLattice::lower_right)
      .def_readonly("upper_left", &RectLattice::upper_left)
      .def_readonly("upper_right", &RectLattice::upper_right)
      .def_property_readonly("size", &RectLattice::size)
      .def("to_json", [](RectLattice const& R) { return to_python(to_json(R)); })
      .def("__len__", &RectLattice::size);

  m.def("lattice_from_json", [](py::object const& o) { return lattice_from_json(from_python(o)); });
  m.def("rect_from_json", [](py::object const& o) { return rect_from_json(from_python(o)); });
  m.def("make_rectangular", &make_rectangular, py::arg("lattice"));
  m.def("named_lattice", &named_lattice, py::arg("name"));
  m.def("grid", &grid, py::arg("rows"), py::arg("cols"));
  m.def("chain", &chain, py::arg("n"));
  m.def("n5", &n5);
  m.def("direct_product", &direct_product);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("is_distributive", &is_distributive);

  m.def(
      "congruences",
      [](FiniteLattice const& L) {
        std::vector<std::vector<Element>> out;
        auto const con = congruence_lattice(L);
        for (auto const& c : con.congruences()) {
          out.push_back(c.labels());
        }
        return out;
      },
      "Congruences as block-label vectors, identity first.");
  m.def("congruence_lattice", [](FiniteLattice const& L) { return congruence_lattice(L).lattice(); });
  m.def("is_simple", &is_simple);

  m.def(
      "bounded_homs",
      [](FiniteLattice const& D, FiniteLattice const& E) {
        std::vector<std::vector<Element>> out;
        for (auto const& h : bounded_homs(D, E)) {
          out.push_back(h.map());
        }
        return out;
      },
      py::arg("source"), py::arg("target"));
  m.def(
      "isotone_map_count",
      [](FiniteLattice const& D, FiniteLattice const& E) {
        return isotone_maps(join_irreducibles(E).order, join_irreducibles(D).order).size();
      },
      py::arg("source"), py::arg("target"));

  m.def(
      "filter_representation",
      [](RectLattice const& F, RectLattice const& G, py::object const& phi) {
        auto h   = pick_hom(F, G, phi);
        auto rep = filter_representation(F, G, h);
        return construction(rep, verify_filter_representation(rep.output.lattice, F.lattice,
                                                              rep.embedded_F, G.lattice,
                                                              rep.embedded_G, h));
      },
      py::arg("F"), py::arg("G"), py::arg("phi") = 0,
      "phi is an index into bounded_homs(Con F, Con G) or an explicit map.");
  m.def(
      "ideal_representation",
      [](RectLattice const& F, RectLattice const& G, py::object const& phi) {
        auto h   = pick_hom(F, G, phi);
        auto rep = ideal_representation(F, G, h);
        return construction(rep, verify_ideal_representation(rep.output.lattice, F.lattice,
                                                             rep.embedded_F, G.lattice,
                                                             rep.embedded_G, h));
      },
      py::arg("F"), py::arg("G"), py::arg("phi") = 0);
  m.def("simple_ideal_embedding",
        [](RectLattice const& G) { return simple_ideal_embedding(G).output; });
  m.def("check_ideal", [](RectLattice const& G) {
    auto                     c = upper_chain_collapse_check(G);
    std::vector<std::string> w;
    for (auto const& a : c.witnesses) {
      w.push_back(format_blocks(a));
    }
    return std::make_pair(c.holds, w);
  });
  m.def("lemma_suite", [] { return to_python(to_json(lemma_suite(default_catalog()))); });
  m.def(
      "render_svg",
      [](py::object const& L) {
        if (py::isinstance<RectLattice>(L)) {
          auto const& R = L.cast<RectLattice const&>();
          return render_svg(R.lattice, layout(R));
        }
        auto const& F = L.cast<FiniteLattice const&>();
        return render_svg(F, layout(F));
      },
      py::arg("lattice"));
}
