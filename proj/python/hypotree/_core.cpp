#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypotree/classify.hpp"
#include "hypotree/constructions.hpp"
#include "hypotree/enumeration.hpp"
#include "hypotree/error.hpp"
#include "hypotree/io.hpp"
#include "hypotree/spectral.hpp"

namespace py = pybind11;
using namespace hypotree;

namespace {

Method method_from(const std::string& s) {
    if (s == "exact_roots" || s == "exact")
        return Method::exact_roots;
    if (s == "dense" || s == "dense_eigensolver")
        return Method::dense_eigensolver;
    throw py::value_error("method must be 'exact_roots' or 'dense'");
}

py::dict energy_dict(const EnergyResult& r) {
    py::dict d;
    d["energy"] = r.energy;
    d["error_bound"] = r.error_bound;
    d["nullity"] = r.nullity;
    d["eigenvalues"] = r.eigenvalues;
    d["method"] = method_name(r.method);
    return d;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["n"] = v.n;
    d["delta"] = v.delta;
    d["feasible"] = v.feasible;
    d["hypo"] = v.hypo_exists;
    d["strong"] = v.strong_exists;
    d["clause"] = v.clause;
    if (v.witness)
        d["witness"] = *v.witness;
    if (v.certificate)
        d["certificate"] = energy_dict(*v.certificate);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hypoenergetic tree toolkit: constructions, exact spectra, classification";

    py::register_exception<Error>(m, "HypotreeError");

    py::class_<Tree>(m, "Tree")
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def("order", &Tree::order)
        .def("degree", &Tree::degree, py::arg("v"))
        .def("neighbors", &Tree::neighbors, py::arg("v"))
        .def("edges", &Tree::edges)
        .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
        .def("__repr__", [](const Tree& t) {
            std::ostringstream os;
            os << "Tree(n=" << t.order() << ", edges=" << t.edges().size() << ")";
            return os.str();
        });

    m.def("max_degree", &max_degree, py::arg("tree"));
    m.def("coalesce", &coalesce, py::arg("g"), py::arg("u"), py::arg("h"), py::arg("v"));
    m.def("canonical_code",
          [](const Tree& t) { return canonical_code(t).code; }, py::arg("tree"));
    m.def("centroids", &centroids, py::arg("tree"));

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("tree"));
    m.def("to_dot", &to_dot, py::arg("tree"));

    m.def("star", &star, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("complete_dary", &complete_dary, py::arg("d"), py::arg("h"));
    m.def("dary_order", &dary_order, py::arg("d"), py::arg("h"));
    m.def("tstar", &tstar, py::arg("n"), py::arg("d"));
    m.def("tstar_digits", [](long long n, int d) {
        const TStarDigits dg = tstar_digits(n, d);
        py::dict out;
        out["d"] = dg.d;
        out["level"] = dg.level;
        out["a"] = dg.a;
        out["r"] = dg.r;
        out["terminal"] = dg.terminal == TStarDigits::Terminal::all_prev ? "all_prev"
                          : dg.terminal == TStarDigits::Terminal::all_cur ? "all_cur"
                                                                          : "mixed";
        out["q_l"] = dg.q_l;
        out["r_l"] = dg.r_l;
        return out;
    }, py::arg("n"), py::arg("d"));
    m.def("max_nullity_tree", &max_nullity_tree, py::arg("n"), py::arg("delta"));
    m.def("nullity_cover_size", &nullity_cover_size, py::arg("n"), py::arg("delta"));
    m.def("figure1", py::overload_cast<const std::string&>(&figure1), py::arg("name"));

    m.def("char_poly_coeffs", [](const Tree& t) {
        std::vector<std::string> out;
        for (const auto& c : char_poly(t).coeffs)
            out.push_back(c.str());
        return out;
    }, py::arg("tree"));
    m.def("matching_number", &matching_number, py::arg("tree"));
    m.def("nullity", &nullity, py::arg("tree"));
    m.def("energy", [](const Tree& t, double tol, const std::string& method) {
        return energy_dict(energy(t, tol, method_from(method)));
    }, py::arg("tree"), py::arg("tol") = 1e-9, py::arg("method") = "exact_roots");
    m.def("energy_upper_bound", &energy_upper_bound, py::arg("tree"));

    m.def("degree_feasible", &degree_feasible, py::arg("n"), py::arg("delta"));
    m.def("hypo_exists",
          [](int n, int delta) { return verdict_dict(hypo_exists(n, delta)); },
          py::arg("n"), py::arg("delta"));
    m.def("strong_exists",
          [](int n, int delta) { return verdict_dict(strong_exists(n, delta)); },
          py::arg("n"), py::arg("delta"));
    m.def("certify", &certify, py::arg("tree"), py::arg("strong"), py::arg("tol") = 1e-9);
    m.def("witness", [](int n, int delta, bool strong, double tol) {
        return verdict_dict(witness(n, delta, strong, tol));
    }, py::arg("n"), py::arg("delta"), py::arg("strong") = false, py::arg("tol") = 1e-9);

    m.def("all_free_trees", [](int n, std::optional<int> delta_cap) {
        return all_free_trees(n, delta_cap);
    }, py::arg("n"), py::arg("delta_cap") = py::none());
    m.def("min_energy_tree", [](int n, int delta_cap, double tol) {
        MinEnergyResult r = min_energy_tree(n, delta_cap, tol);
        return py::make_tuple(r.tree, energy_dict(r.energy), r.unique);
    }, py::arg("n"), py::arg("delta_cap"), py::arg("tol") = 1e-9);
    m.def("exhaustive_verdict", &exhaustive_verdict, py::arg("n"), py::arg("delta"),
          py::arg("strong"), py::arg("override_guard") = false, py::arg("tol") = 1e-6);
}
