#include <map>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corrkit/classic.hpp"
#include "corrkit/error.hpp"
#include "corrkit/gcorr.hpp"
#include "corrkit/gcorr_multi.hpp"
#include "corrkit/harness.hpp"
#include "corrkit/ncc.hpp"
#include "corrkit/stats.hpp"
#include "corrkit/synth.hpp"

namespace py = pybind11;
using namespace corrkit;

namespace {

using Vec = std::vector<double>;

PairedSample paired(Vec x, Vec y) { return PairedSample(std::move(x), std::move(y)); }

py::dict panel_dict(const CoefficientPanel& p) {
    py::dict d;
    py::dict notes;
    auto put = [&](const char* name, const Coefficient& c) {
        d[name] = c.value ? py::cast(*c.value) : py::none();
        if (!c.note.empty()) notes[name] = c.note;
    };
    put("r", p.r);
    put("rho", p.rho);
    put("tau", p.tau);
    put("kappa", p.kappa);
    put("ncc", p.ncc);
    put("omega", p.omega);
    d["omega_sd"] = p.omega_sd ? py::cast(*p.omega_sd) : py::none();
    d["notes"] = notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_corrkit, m) {
    m.doc() = "C++ core of corrkit";

    static py::exception<Error> error_type(m, "CorrkitError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::enum_<Diagonal>(m, "Diagonal").value("main", Diagonal::main).value("anti", Diagonal::anti);

    py::class_<QuadrantCounts>(m, "QuadrantCounts")
        .def_readonly("c1_plus", &QuadrantCounts::c1_plus)
        .def_readonly("c1_minus", &QuadrantCounts::c1_minus)
        .def_readonly("c2_plus", &QuadrantCounts::c2_plus)
        .def_readonly("c2_minus", &QuadrantCounts::c2_minus)
        .def_readonly("on_median", &QuadrantCounts::on_median);

    py::class_<FechnerTrace>(m, "FechnerTrace")
        .def_readonly("i0", &FechnerTrace::i0)
        .def_readonly("binary", &FechnerTrace::binary)
        .def_readonly("kappa", &FechnerTrace::kappa);

    py::class_<GCorrFit>(m, "GCorrFit")
        .def_readonly("c", &GCorrFit::c)
        .def_readonly("y_median", &GCorrFit::y_median)
        .def_readonly("omega", &GCorrFit::omega)
        .def_readonly("diagonal", &GCorrFit::diagonal)
        .def_readonly("counts", &GCorrFit::counts)
        .def_readonly("removed_ties", &GCorrFit::removed_ties)
        .def("__repr__", [](const GCorrFit& f) {
            return "GCorrFit(omega=" + std::to_string(f.omega) + ", c=" + std::to_string(f.c) +
                   ", y_median=" + std::to_string(f.y_median) + ")";
        });

    py::class_<SplitEstimate>(m, "SplitEstimate")
        .def_readonly("omega_mean", &SplitEstimate::omega_mean)
        .def_readonly("omega_stddev", &SplitEstimate::omega_stddev)
        .def_readonly("iterations", &SplitEstimate::iterations)
        .def_readonly("degenerate", &SplitEstimate::degenerate);

    py::class_<HyperplaneFit>(m, "HyperplaneFit")
        .def_readonly("normal", &HyperplaneFit::normal)
        .def_readonly("offset", &HyperplaneFit::offset)
        .def_readonly("omega", &HyperplaneFit::omega)
        .def_readonly("y_median", &HyperplaneFit::y_median)
        .def_readonly("diagonal", &HyperplaneFit::diagonal)
        .def_readonly("counts", &HyperplaneFit::counts)
        .def_readonly("regularized", &HyperplaneFit::regularized);

    m.def("sample_mean", [](const Vec& v) { return sample_mean(v); }, py::arg("values"));
    m.def("sample_median", [](const Vec& v) { return sample_median(v); }, py::arg("values"));
    m.def("rank_with_average_ties", [](const Vec& v) { return rank_with_average_ties(v).ranks; }, py::arg("values"));

    m.def("pearson", [](Vec x, Vec y) { return pearson(paired(std::move(x), std::move(y))); }, py::arg("x"), py::arg("y"));
    m.def("spearman", [](Vec x, Vec y) { return spearman(paired(std::move(x), std::move(y))); }, py::arg("x"), py::arg("y"));
    m.def("kendall", [](Vec x, Vec y) { return kendall(paired(std::move(x), std::move(y))); }, py::arg("x"), py::arg("y"));
    m.def("fechner", [](Vec x, Vec y) { return fechner(paired(std::move(x), std::move(y))); }, py::arg("x"), py::arg("y"));
    m.def(
        "ncc", [](Vec x, Vec y, std::size_t bins) { return ncc(paired(std::move(x), std::move(y)), bins); },
        py::arg("x"), py::arg("y"), py::arg("bins") = kDefaultNccBins);

    m.def(
        "g_objective",
        [](const Vec& x, const Vec& y, double c, double y_median) {
            const GObjective g = g_objective(paired(x, y), c, y_median);
            return py::make_tuple(g.g, g.counts, g.diagonal);
        },
        py::arg("x"), py::arg("y"), py::arg("c"), py::arg("y_median"));
    m.def("fit_g", [](Vec x, Vec y) { return fit_g(paired(std::move(x), std::move(y))); }, py::arg("x"), py::arg("y"),
          "Full-data g-correlation fit.");
    m.def(
        "estimate_g",
        [](Vec x, Vec y, std::size_t train, std::size_t eval, std::size_t iterations, std::uint64_t seed,
           unsigned threads) {
            const PairedSample s = paired(std::move(x), std::move(y));
            SplitPlan plan{train, eval, iterations, RngSeed{seed}};
            py::gil_scoped_release release;
            return estimate_g(s, plan, threads);
        },
        py::arg("x"), py::arg("y"), py::arg("train"), py::arg("eval"), py::arg("iterations") = 10000,
        py::arg("seed") = kDefaultSeed.value, py::arg("threads") = 1);
    m.def(
        "fit_g_multi",
        [](std::vector<std::vector<double>> rows, Vec y) { return fit_g_multi(MultiSample(std::move(rows), std::move(y))); },
        py::arg("rows"), py::arg("y"));

    m.def(
        "generate",
        [](const std::string& family, std::size_t n, std::uint64_t seed, std::map<std::string, double> params) {
            const PairedSample s = generate(FamilySpec{parse_family(family), n, RngSeed{seed}, std::move(params)});
            return py::make_tuple(Vec(s.xs().begin(), s.xs().end()), Vec(s.ys().begin(), s.ys().end()));
        },
        py::arg("family"), py::arg("n"), py::arg("seed") = kDefaultSeed.value,
        py::arg("params") = std::map<std::string, double>{});

    m.def(
        "compute_panel",
        [](Vec x, Vec y, std::size_t bins, std::optional<std::size_t> train, std::optional<std::size_t> eval,
           std::size_t iterations, std::uint64_t seed) {
            const PairedSample s = paired(std::move(x), std::move(y));
            PanelOptions options;
            options.bins = bins;
            if (train) {
                options.split = SplitPlan{*train, eval ? *eval : s.size() - *train, iterations, RngSeed{seed}};
            }
            return panel_dict(compute_panel(s, options));
        },
        py::arg("x"), py::arg("y"), py::arg("bins") = kDefaultNccBins, py::arg("train") = py::none(),
        py::arg("eval") = py::none(), py::arg("iterations") = 10000, py::arg("seed") = kDefaultSeed.value);

    m.attr("__version__") = CORRKIT_VERSION;
}
