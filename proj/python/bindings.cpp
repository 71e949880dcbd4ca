#include "cotlab/characteristics.hpp"
#include "cotlab/construct.hpp"
#include "cotlab/errors.hpp"
#include "cotlab/model_spaces.hpp"
#include "cotlab/registry.hpp"
#include "cotlab/transversality.hpp"
#include "cotlab/verify.hpp"
#include "cotlab/version.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <tuple>

namespace py = pybind11;
using namespace cotlab;

namespace {

ModelSpace model_by_name(const std::string& name)
{
    if (name == "heisenberg")
        return ModelSpace::heisenberg();
    if (name == "su2")
        return ModelSpace::su2();
    if (name == "sl2")
        return ModelSpace::sl2();
    throw std::invalid_argument("unknown model: " + name);
}

Direction direction_by_name(const std::string& name)
{
    if (name == "forward")
        return Direction::Forward;
    if (name == "backward")
        return Direction::Backward;
    throw std::invalid_argument("direction must be 'forward' or 'backward'");
}

} // namespace

PYBIND11_MODULE(_cotlab, m)
{
    m.doc() = "Transversality geometry of graph surfaces in the Heisenberg group";
    m.attr("__version__") = kVersion;

    auto base = py::register_exception<Error>(m, "CotlabError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());

    py::class_<Jet2>(m, "Jet2")
        .def_readonly("x", &Jet2::x)
        .def_readonly("y", &Jet2::y)
        .def_readonly("f", &Jet2::f)
        .def_readonly("fx", &Jet2::fx)
        .def_readonly("fy", &Jet2::fy)
        .def_readonly("fxx", &Jet2::fxx)
        .def_readonly("fxy", &Jet2::fxy)
        .def_readonly("fyy", &Jet2::fyy)
        .def("__repr__", [](const Jet2& j) {
            return py::str("Jet2(x={}, y={}, f={}, fx={}, fy={}, fxx={}, fxy={}, fyy={})")
                .format(j.x, j.y, j.f, j.fx, j.fy, j.fxx, j.fxy, j.fyy);
        });

    py::class_<SurfaceGraph>(m, "Surface")
        .def("jet", &SurfaceGraph::jet, py::arg("x"), py::arg("y"))
        .def("value", &SurfaceGraph::value, py::arg("x"), py::arg("y"))
        .def("contains", &SurfaceGraph::contains, py::arg("x"), py::arg("y"))
        .def_property_readonly("provenance", &SurfaceGraph::provenance)
        .def("__repr__", [](const SurfaceGraph& s) { return "Surface(" + s.provenance() + ")"; });

    auto sm = m.def_submodule("surfaces", "Named test surfaces");
    sm.def("zero", &surfaces::zero);
    sm.def("xy_half", &surfaces::xy_half);
    sm.def("quartic", &surfaces::quartic);
    sm.def("plane", &surfaces::plane, py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "zero_cot_solution",
        [](double c1, double c2, const std::string& F) { return zero_cot_solution(c1, c2, parse_profile(F)); },
        py::arg("c1"), py::arg("c2"), py::arg("F"));
    m.def(
        "bernstein",
        [](double a, double b, std::optional<double> c, std::optional<std::string> g) {
            if (c && g)
                throw std::invalid_argument("give either c (linear) or g (quadratic)");
            if (g)
                return bernstein(BernsteinQuadratic{a, b, parse_profile(*g)});
            return bernstein(BernsteinLinear{a, b, c.value_or(0.0)});
        },
        py::arg("a"), py::arg("b"), py::arg("c") = py::none(), py::arg("g") = py::none());
    m.def(
        "pminimal_local",
        [](double x0, const std::string& F, const std::string& G) {
            return pminimal_local(x0, parse_profile(F), parse_profile(G));
        },
        py::arg("x0"), py::arg("F"), py::arg("G"));

    m.def("family_names", &family_names);
    m.def(
        "make_family",
        [](const std::string& family, std::optional<double> c1, std::optional<double> c2, std::optional<double> a,
           std::optional<double> b, std::optional<double> c, std::optional<double> x0,
           std::optional<std::string> F, std::optional<std::string> G, std::optional<std::string> g) {
            return make_family({family, c1, c2, a, b, c, x0, F, G, g});
        },
        py::arg("family"), py::kw_only(), py::arg("c1") = py::none(), py::arg("c2") = py::none(),
        py::arg("a") = py::none(), py::arg("b") = py::none(), py::arg("c") = py::none(),
        py::arg("x0") = py::none(), py::arg("F") = py::none(), py::arg("G") = py::none(),
        py::arg("g") = py::none());

    m.def(
        "classify_point",
        [](const Jet2& j, double eps) {
            return classify_point(transversality_data(j), eps) == PointKind::Regular ? "regular" : "singular";
        },
        py::arg("jet"), py::arg("eps") = kSingularEps);
    m.def("dot", py::overload_cast<const Jet2&, double>(&dot), py::arg("jet"), py::arg("eps") = kSingularEps);
    m.def("cot", py::overload_cast<const Jet2&, double>(&cot), py::arg("jet"), py::arg("eps") = kSingularEps);
    m.def("cot_printed", py::overload_cast<const Jet2&, double>(&cot_printed), py::arg("jet"),
          py::arg("eps") = kSingularEps);
    m.def("zcot_residual", &zcot_residual, py::arg("jet"));
    m.def("pminimal_residual", &pminimal_residual, py::arg("jet"));

    py::class_<TraceSample>(m, "TraceSample")
        .def_readonly("t", &TraceSample::t)
        .def_readonly("x", &TraceSample::x)
        .def_readonly("y", &TraceSample::y)
        .def_readonly("a", &TraceSample::a)
        .def_readonly("r", &TraceSample::r);
    m.def(
        "trace",
        [](const SurfaceGraph& s, double x0, double y0, const std::string& direction, double step, double max_t) {
            const auto tr = trace(s, x0, y0, direction_by_name(direction), step, max_t);
            return py::make_tuple(tr.samples, to_string(tr.termination));
        },
        py::arg("surface"), py::arg("x0"), py::arg("y0"), py::arg("direction") = "forward",
        py::arg("step") = 1e-3, py::arg("max_t") = 1.0,
        "Returns (samples, termination) for the characteristic through (x0, y0).");

    m.def("riccati_closed_form", &riccati_closed_form, py::arg("a0"), py::arg("k"), py::arg("t"));
    m.def(
        "singular_verdict",
        [](double a0, double k) {
            std::vector<std::tuple<std::string, std::optional<double>>> out;
            for (const auto& f : singular_verdict(a0, k).findings)
                out.emplace_back(to_string(f.kind), f.value);
            return out;
        },
        py::arg("a0"), py::arg("k"));

    m.def(
        "_structure_constants",
        [](const std::string& model) {
            const auto sc = structure_constants(model_by_name(model));
            std::vector<std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>> out(
                3, std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>(3));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k)
                        out[i][j].emplace_back(sc(i, j, k).num(), sc(i, j, k).den());
            return out;
        },
        py::arg("model"));
    m.def(
        "cot_from_constants",
        [](const std::string& model, double a) { return cot_from_constants(model_by_name(model), a); },
        py::arg("model"), py::arg("a"));

    m.def(
        "_run_suite_json", [](const std::string& suite) { return report_json(run_suite(suite)); },
        py::arg("suite"));
}
