#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>

#include "densepart/errors.hpp"
#include "densepart/experiments.hpp"
#include "densepart/graph.hpp"
#include "densepart/moments.hpp"
#include "densepart/oracle.hpp"
#include "densepart/pipeline.hpp"
#include "densepart/zero_free.hpp"

namespace py = pybind11;
using namespace densepart;

namespace {

Mode parse_mode(const std::string& s) {
    if (s == "direct") return Mode::Direct;
    if (s == "rigorous") return Mode::Rigorous;
    if (s == "exact") return Mode::Exact;
    throw DomainError("mode must be direct, rigorous or exact");
}

ApproxResult run_approx(const Graph& g, int m, std::optional<double> gamma, std::optional<double> alpha,
                        const std::string& mode, int order, double eps, int max_order, std::optional<double> rho,
                        bool exploratory, std::uint64_t budget) {
    ApproxConfig cfg;
    cfg.m = m;
    cfg.gamma = gamma;
    cfg.alpha = alpha;
    cfg.mode = parse_mode(mode);
    cfg.order = order;
    cfg.eps = eps;
    cfg.max_order = max_order;
    cfg.rho_override = rho;
    cfg.require_guarantee = !exploratory;
    cfg.enumeration.budget = budget;
    py::gil_scoped_release release;
    return approximate(g, cfg);
}

std::string graph_repr(const Graph& g) {
    std::ostringstream os;
    os << "Graph(n=" << g.n() << ", edges=" << g.edge_count() << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_densepart, m) {
    m.doc() = "Density partition functions of graphs";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", [](const Graph& g, Vertex i, Vertex j) {
            if (i < 0 || j < 0 || i >= g.n() || j >= g.n()) throw py::index_error("vertex out of range");
            return g.has_edge(i, j);
        })
        .def("complement", &Graph::complement)
        .def("to_edge_list", [](const Graph& g) {
            std::ostringstream os;
            write_edge_list(os, g);
            return os.str();
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", &graph_repr);

    py::class_<SubsetDensity>(m, "SubsetDensity")
        .def_readonly("subset", &SubsetDensity::subset)
        .def_readonly("spanned_edges", &SubsetDensity::spanned_edges)
        .def_readonly("pairs", &SubsetDensity::pairs)
        .def_property_readonly("sigma", &SubsetDensity::sigma);

    py::class_<ZeroFreeParams>(m, "ZeroFreeParams")
        .def_readonly("delta", &ZeroFreeParams::delta)
        .def_readonly("theta", &ZeroFreeParams::theta)
        .def_readonly("eta", &ZeroFreeParams::eta)
        .def_readonly("lambda_", &ZeroFreeParams::lambda)
        .def_readonly("omega", &ZeroFreeParams::omega)
        .def_readonly("m", &ZeroFreeParams::m)
        .def_readonly("rho", &ZeroFreeParams::rho);

    py::class_<ApproxResult>(m, "ApproxResult")
        .def_property_readonly("mode", [](const ApproxResult& r) { return to_string(r.mode); })
        .def_readonly("n", &ApproxResult::n)
        .def_readonly("m", &ApproxResult::m)
        .def_readonly("gamma", &ApproxResult::gamma)
        .def_readonly("alpha", &ApproxResult::alpha)
        .def_readonly("order_used", &ApproxResult::order_used)
        .def_readonly("ln_den", &ApproxResult::ln_den)
        .def_readonly("certified_density", &ApproxResult::certified_density)
        .def_readonly("ln_h1", &ApproxResult::ln_h1)
        .def_readonly("shift", &ApproxResult::shift)
        .def_readonly("error_bound", &ApproxResult::error_bound)
        .def_readonly("budget_limited", &ApproxResult::budget_limited)
        .def_readonly("zero_free_certified", &ApproxResult::zero_free_certified)
        .def("certified", &certified_density, py::arg("eps"),
             "Lower bound (ln_den - eps)/(gamma m) on the densest m-subset density.");

    py::class_<IdentityCheck>(m, "IdentityCheck")
        .def_readonly("lhs", &IdentityCheck::lhs)
        .def_readonly("rhs", &IdentityCheck::rhs);

    py::class_<ZeroExperimentSummary>(m, "ZeroSummary")
        .def_readonly("n", &ZeroExperimentSummary::n)
        .def_readonly("m", &ZeroExperimentSummary::m)
        .def_readonly("trials", &ZeroExperimentSummary::trials)
        .def_readonly("disc_radius", &ZeroExperimentSummary::disc_radius)
        .def_readonly("threshold_n", &ZeroExperimentSummary::threshold_n)
        .def_readonly("above_threshold", &ZeroExperimentSummary::above_threshold)
        .def_readonly("in_disc_count", &ZeroExperimentSummary::in_disc_count)
        .def_readonly("failures", &ZeroExperimentSummary::failures)
        .def_readonly("frequency", &ZeroExperimentSummary::frequency)
        .def_readonly("bound", &ZeroExperimentSummary::bound);

    m.def("parse_edge_list", py::overload_cast<std::string_view>(&parse_edge_list), py::arg("text"),
          "Parse the edge-list format (1-based ids).");
    m.def("random_gnp", &random_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("density", [](const Graph& g, std::vector<Vertex> subset) { return density(g, subset); }, py::arg("g"),
          py::arg("subset"));

    m.def("den_exact", [](const Graph& g, int mm, double gamma, std::uint64_t budget) {
              py::gil_scoped_release release;
              return den_exact(g, mm, gamma, budget);
          },
          py::arg("g"), py::arg("m"), py::arg("gamma"), py::arg("budget") = kDefaultOracleBudget,
          "ln den_m(G; gamma) by enumeration.");

    m.def("approx", &run_approx, py::arg("g"), py::arg("m"), py::kw_only(), py::arg("gamma") = py::none(),
          py::arg("alpha") = py::none(), py::arg("mode") = "direct", py::arg("order") = 3, py::arg("eps") = 0.1,
          py::arg("max_order") = 64, py::arg("rho") = py::none(), py::arg("exploratory") = false,
          py::arg("budget") = EnumerationOptions{}.budget);

    m.def("h_derivatives", [](const Graph& g, int mm, double alpha, int order) {
              return h_derivatives_enumerated(weights_from_alpha(g, alpha), mm, order).values;
          },
          py::arg("g"), py::arg("m"), py::arg("alpha"), py::arg("order") = 3,
          "h^(k)(0), k = 0..order, for the +-alpha weights of g.");

    m.def("extract_subset", [](const Graph& g, int mm, double gamma, const std::string& engine) {
              Engine e;
              if (engine == "exact") e = Engine::Exact;
              else if (engine == "approximate") e = Engine::Approximate;
              else throw DomainError("engine must be exact or approximate");
              py::gil_scoped_release release;
              return extract_subset(g, mm, gamma, e);
          },
          py::arg("g"), py::arg("m"), py::arg("gamma"), py::arg("engine") = "exact");

    m.def("solve_params", &solve_params, py::arg("delta"), py::arg("m"));
    m.def("rho_for", &rho_for, py::arg("params"), py::arg("gamma"), py::arg("m"));

    m.def("expectation_identity_check", &expectation_identity_check, py::arg("n"), py::arg("m"), py::arg("radius"),
          py::arg("theta") = 0.0);

    m.def("run_zero_experiment", [](int n, int mm, double r, double tau, int trials, std::uint64_t seed, int threads) {
              ZeroExperimentResult res;
              {
                  py::gil_scoped_release release;
                  res = run_zero_experiment(n, mm, r, tau, trials, seed, threads);
              }
              std::vector<double> moduli;
              moduli.reserve(res.records.size());
              for (const auto& rec : res.records) moduli.push_back(rec.min_root_modulus);
              return py::make_tuple(res.summary, moduli);
          },
          py::arg("n"), py::arg("m"), py::arg("r"), py::arg("tau"), py::arg("trials"), py::arg("seed"),
          py::arg("threads") = 1, "Returns (summary, smallest root modulus per trial).");
}
