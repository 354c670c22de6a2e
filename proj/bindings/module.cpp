#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rootsmith/lattice.hpp"
#include "rootsmith/quasicox.hpp"
#include "rootsmith/root_system.hpp"
#include "rootsmith/selftest.hpp"
#include "rootsmith/simple_systems.hpp"
#include "rootsmith/weyl.hpp"

namespace py = pybind11;

using rootsmith::Coord;
using rootsmith::RootCoords;
using rootsmith::RootIndex;
using rootsmith::RootSystem;

namespace {

// Exact conversion through the decimal representation, so results larger
// than 64 bits arrive as ordinary Python ints.
py::int_ to_py_int(const rootsmith::lattice::Int& v) {
  std::ostringstream ss;
  ss << v;
  return py::int_(py::str(ss.str()));
}

rootsmith::lattice::IntMatrix matrix_from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  return rootsmith::lattice::IntMatrix::from_rows(rows);
}

py::list matrix_to_py(const rootsmith::lattice::IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py_int(m(i, j)));
    rows.append(std::move(row));
  }
  return rows;
}

RootIndex index_of(const RootSystem& rs, const RootCoords& v) {
  const auto idx = rs.root_index(v);
  if (!idx) throw py::value_error("not a root");
  return *idx;
}

std::vector<RootIndex> indices_of(const RootSystem& rs,
                                  const std::vector<RootCoords>& vs) {
  std::vector<RootIndex> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(index_of(rs, v));
  return out;
}

std::vector<RootCoords> coords_of(const RootSystem& rs,
                                  const std::vector<RootIndex>& idx) {
  std::vector<RootCoords> out;
  out.reserve(idx.size());
  for (const RootIndex i : idx) out.push_back(rs.root(i));
  return out;
}

py::dict verdict_dict(const rootsmith::quasicox::GenerationVerdict& v) {
  py::dict d;
  d["generates"] = v.generates;
  d["root_span_index"] =
      v.root_span_index ? py::object(py::int_(*v.root_span_index))
                        : py::object(py::none());
  d["coroot_span_index"] =
      v.coroot_span_index ? py::object(py::int_(*v.coroot_span_index))
                          : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact computations in crystallographic root systems: lattice "
      "criteria for reflection generation, quasi-Coxeter elements, simple "
      "systems, and parabolic completion orbits.";

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& label) {
             return RootSystem::build(label);
           }),
           py::arg("label"))
      .def_property_readonly(
          "label", [](const RootSystem& rs) { return rs.type().label(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("positive_count", &RootSystem::positive_count)
      .def_property_readonly("weyl_order", &RootSystem::weyl_order)
      .def_property_readonly("simply_laced", &RootSystem::is_simply_laced)
      .def("cartan", [](const RootSystem& rs) { return rs.cartan(); })
      .def("gram", [](const RootSystem& rs) { return rs.gram(); })
      .def("symmetrizers",
           [](const RootSystem& rs) { return rs.symmetrizers(); })
      .def("roots", [](const RootSystem& rs) { return rs.roots(); })
      .def("coroots",
           [](const RootSystem& rs) {
             std::vector<RootCoords> out;
             for (std::size_t i = 0; i < rs.root_count(); ++i)
               out.push_back(rs.coroot(static_cast<RootIndex>(i)));
             return out;
           })
      .def("is_root",
           [](const RootSystem& rs, const RootCoords& v) {
             return rs.root_index(v).has_value();
           },
           py::arg("coords"))
      .def("inner",
           [](const RootSystem& rs, const RootCoords& x, const RootCoords& y) {
             return rs.inner(x, y);
           },
           py::arg("x"), py::arg("y"))
      .def("cartan_pairing",
           [](const RootSystem& rs, const RootCoords& beta,
              const RootCoords& alpha) {
             return rs.cartan_pairing(beta, index_of(rs, alpha));
           },
           py::arg("beta"), py::arg("alpha"))
      .def("reflect",
           [](const RootSystem& rs, const RootCoords& alpha,
              const RootCoords& v) {
             return rs.reflect(index_of(rs, alpha), v);
           },
           py::arg("alpha"), py::arg("v"))
      .def("coroot",
           [](const RootSystem& rs, const RootCoords& alpha) {
             return rs.coroot(index_of(rs, alpha));
           },
           py::arg("alpha"))
      .def("__repr__", [](const RootSystem& rs) {
        return "RootSystem('" + rs.type().label() + "')";
      });

  m.def("hnf",
        [](const std::vector<std::vector<std::int64_t>>& rows) {
          const auto h = rootsmith::lattice::hnf(matrix_from_rows(rows));
          return py::make_tuple(matrix_to_py(h.hnf), h.rank, h.pivot_cols);
        },
        py::arg("rows"),
        "Row Hermite normal form; returns (hnf, rank, pivot_cols).");
  m.def("smith_divisors",
        [](const std::vector<std::vector<std::int64_t>>& rows) {
          py::list out;
          for (const auto& d :
               rootsmith::lattice::smith_divisors(matrix_from_rows(rows)))
            out.append(to_py_int(d));
          return out;
        },
        py::arg("rows"));
  m.def("lattice_span_equal",
        [](const std::vector<std::vector<std::int64_t>>& a,
           const std::vector<std::vector<std::int64_t>>& b) {
          return rootsmith::lattice::lattice_span_equal(matrix_from_rows(a),
                                                        matrix_from_rows(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("lattice_index",
        [](const std::vector<std::vector<std::int64_t>>& sub,
           const std::vector<std::vector<std::int64_t>>& sup) {
          return to_py_int(rootsmith::lattice::lattice_index(
              matrix_from_rows(sub), matrix_from_rows(sup)));
        },
        py::arg("sub"), py::arg("sup"));
  m.def("is_unimodular_basis",
        [](const std::vector<std::vector<std::int64_t>>& rows) {
          return rootsmith::lattice::is_unimodular_basis(
              matrix_from_rows(rows));
        },
        py::arg("rows"));

  m.def("generation_verdict",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          const auto idx = indices_of(rs, roots);
          return verdict_dict(rootsmith::quasicox::generates_lattice_criterion(
              rs, rootsmith::weyl::RootSet(idx.begin(), idx.end())));
        },
        py::arg("rs"), py::arg("roots"),
        "Root/coroot lattice generation test for a set of reflections.");
  m.def("generates_oracle",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          const auto idx = indices_of(rs, roots);
          return rootsmith::weyl::generates_oracle(
              rs, rootsmith::weyl::RootSet(idx.begin(), idx.end()));
        },
        py::arg("rs"), py::arg("roots"));
  m.def("closure",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          const auto idx = indices_of(rs, roots);
          const auto closed = rootsmith::weyl::closure_subsystem(
              rs, rootsmith::weyl::RootSet(idx.begin(), idx.end()));
          return coords_of(rs, {closed.begin(), closed.end()});
        },
        py::arg("rs"), py::arg("roots"));
  m.def("is_minimal_generating",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          const auto idx = indices_of(rs, roots);
          return rootsmith::quasicox::is_minimal_generating(
              rs, rootsmith::weyl::RootSet(idx.begin(), idx.end()));
        },
        py::arg("rs"), py::arg("roots"));
  m.def("is_simple_system",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          const auto idx = indices_of(rs, roots);
          return rootsmith::simple_systems::is_simple_system(
              rs, rootsmith::weyl::RootSet(idx.begin(), idx.end()));
        },
        py::arg("rs"), py::arg("roots"));

  m.def("obtusify",
        [](const RootSystem& rs, const std::vector<RootCoords>& delta,
           const RootCoords& beta) {
          const auto trace = rootsmith::simple_systems::obtusify(
              rs, indices_of(rs, delta), index_of(rs, beta));
          py::dict d;
          d["gamma"] = trace.gamma_coords;
          d["word"] = trace.word;
          d["steps"] = trace.steps;
          return d;
        },
        py::arg("rs"), py::arg("delta"), py::arg("beta"));
  m.def("completions",
        [](const RootSystem& rs, const std::vector<RootCoords>& delta) {
          return coords_of(rs, rootsmith::simple_systems::completions(
                                   rs, indices_of(rs, delta)));
        },
        py::arg("rs"), py::arg("delta"));
  m.def("orbit_partition",
        [](const RootSystem& rs, const std::vector<RootCoords>& delta,
           std::uint64_t bfs_cap) {
          const auto report = rootsmith::simple_systems::orbit_partition(
              rs, indices_of(rs, delta), bfs_cap);
          py::dict d;
          d["completions"] = coords_of(rs, report.completions);
          d["orbit_count"] = report.orbit_count();
          py::list orbits;
          for (const auto& orbit : report.orbits)
            orbits.append(coords_of(rs, orbit));
          d["orbits"] = std::move(orbits);
          return d;
        },
        py::arg("rs"), py::arg("delta"),
        py::arg("bfs_cap") = rootsmith::weyl::kDefaultBfsCap);
  m.def("find_conjugator",
        [](const RootSystem& rs, const RootCoords& r1,
           const std::vector<RootCoords>& rest, const RootCoords& t1) {
          const auto g = rootsmith::simple_systems::find_conjugator(
              rs, index_of(rs, r1), indices_of(rs, rest), index_of(rs, t1));
          return rootsmith::weyl::simple_images(rs, g);
        },
        py::arg("rs"), py::arg("r1"), py::arg("rest"), py::arg("t1"),
        "Returns g as the list of images of the simple roots.");
  m.def("is_parabolic_corank1",
        [](const RootSystem& rs, const std::vector<RootCoords>& delta) {
          return rootsmith::simple_systems::is_parabolic_corank1(
              rs, indices_of(rs, delta));
        },
        py::arg("rs"), py::arg("delta"));

  m.def("product_of_reflections",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          rootsmith::quasicox::Factorization f;
          for (const auto& v : roots) f.refs.push_back(index_of(rs, v));
          return rootsmith::weyl::simple_images(
              rs, rootsmith::quasicox::product(rs, f));
        },
        py::arg("rs"), py::arg("roots"),
        "Product of reflections, as images of the simple roots.");
  m.def("reflection_length",
        [](const RootSystem& rs, const std::vector<RootCoords>& images) {
          return rootsmith::weyl::reflection_length(
              rs, rootsmith::weyl::from_simple_images(rs, images));
        },
        py::arg("rs"), py::arg("simple_images"));
  m.def("is_quasi_coxeter",
        [](const RootSystem& rs, const std::vector<RootCoords>& images) {
          return rootsmith::quasicox::is_quasi_coxeter(
              rs, rootsmith::weyl::from_simple_images(rs, images));
        },
        py::arg("rs"), py::arg("simple_images"));
  m.def("is_coxeter",
        [](const RootSystem& rs, const std::vector<RootCoords>& images) {
          return rootsmith::quasicox::is_coxeter(
              rs, rootsmith::weyl::from_simple_images(rs, images));
        },
        py::arg("rs"), py::arg("simple_images"));
  m.def("reduced_factorizations",
        [](const RootSystem& rs, const std::vector<RootCoords>& images,
           std::size_t limit) {
          const auto w = rootsmith::weyl::from_simple_images(rs, images);
          py::list out;
          for (const auto& f :
               rootsmith::quasicox::reduced_factorizations(rs, w, limit))
            out.append(coords_of(rs, f.refs));
          return out;
        },
        py::arg("rs"), py::arg("simple_images"), py::arg("limit") = 100000);
  m.def("hurwitz_move",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots,
           std::size_t index, const std::string& dir) {
          rootsmith::quasicox::Factorization f;
          for (const auto& v : roots)
            f.refs.push_back(rs.positive_rep(index_of(rs, v)));
          rootsmith::quasicox::HurwitzDir d;
          if (dir == "left")
            d = rootsmith::quasicox::HurwitzDir::Left;
          else if (dir == "right")
            d = rootsmith::quasicox::HurwitzDir::Right;
          else
            throw py::value_error("dir must be 'left' or 'right'");
          return coords_of(rs,
                           rootsmith::quasicox::hurwitz_move(rs, f, index, d)
                               .refs);
        },
        py::arg("rs"), py::arg("roots"), py::arg("index"), py::arg("dir"));
  m.def("factorization_graph_has_cycle",
        [](const RootSystem& rs, const std::vector<RootCoords>& roots) {
          const auto idx = indices_of(rs, roots);
          return rootsmith::quasicox::factorization_graph_has_cycle(
              rs, rootsmith::weyl::RootSet(idx.begin(), idx.end()));
        },
        py::arg("rs"), py::arg("roots"));

  m.def("selftest",
        [](std::uint64_t seed, std::uint64_t samples, int max_rank) {
          const auto s = rootsmith::selftest::run(seed, samples, max_rank);
          py::dict d;
          d["rng"] = std::string(rootsmith::selftest::kRngAlgorithm);
          d["seed"] = s.seed;
          d["total_checks"] = s.total_checks;
          d["disagreements"] = s.disagreements;
          d["pass"] = s.pass;
          return d;
        },
        py::arg("seed") = 42, py::arg("samples") = 100,
        py::arg("max_rank") = 4);
}
