#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gabdyn/analysis.hpp"
#include "gabdyn/config.hpp"
#include "gabdyn/diagram.hpp"
#include "gabdyn/errors.hpp"
#include "gabdyn/verify.hpp"

namespace py = pybind11;
using namespace gabdyn;

namespace {

py::object to_fraction(const Rat& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

Rat to_rat(const py::object& obj) {
    const std::string text = py::str(obj);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw input_error("cannot parse rational from '" + text + "' (floats are not accepted)");
    q.canonicalize();
    return q;
}

py::list coords_list(const std::vector<Rat>& coords) {
    py::list out;
    for (const Rat& c : coords) out.append(to_fraction(c));
    return out;
}

/// Value wrapper so python never sees the shared_ptr-to-const directly.
struct PySpace {
    SpacePtr p;

    std::string name() const { return p->name(); }
    std::size_t dim() const { return p->dim(); }
    py::list labels() const {
        py::list out;
        for (std::size_t i = 0; i < p->dim(); ++i) out.append(p->label_text(i));
        return out;
    }
    py::list gram() const {
        py::list rows;
        for (std::size_t i = 0; i < p->dim(); ++i) {
            py::list row;
            for (std::size_t j = 0; j < p->dim(); ++j) row.append(to_fraction(p->entry(i, j)));
            rows.append(row);
        }
        return rows;
    }
};

struct PyReport {
    Report rep;

    bool ok() const { return rep.ok(); }
    py::list failures() const {
        py::list out;
        for (const CheckResult& c : rep.failures())
            out.append(c.detail.empty() ? c.name : c.name + ": " + c.detail);
        return out;
    }
    py::list checks() const {
        py::list out;
        for (const CheckResult& c : rep.checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
    }
};

GroupElement make_element(const py::object& a1, const py::object& a2, const py::object& a3) {
    return GroupElement(to_rat(a1), to_rat(a2), to_rat(a3));
}

std::string diagram_text(const CuspTriple& t, const SymmetryGroup& G, const std::string& stage,
                         const std::string& format) {
    const MilnorLattice lat = build_milnor_lattice(t);
    DynkinGraph g;
    if (stage == "milnor") {
        g = to_graph(*lat.space);
    } else if (stage == "milnor-quotient") {
        g = to_graph(*milnor_quotient_space(lat));
    } else if (stage == "orbit") {
        g = to_graph(*build_orbit_space(lat, G).space, {BasisLabel::delta0_bar()});
    } else if (stage == "resolution") {
        const ZModel zm = build_z_model(lat, G);
        const HatBasis hb = build_hat_basis(zm);
        g = to_graph(*hat_space(zm, hb), {BasisLabel::delta0_bar()});
    } else {
        throw input_error("unknown stage '" + stage + "'");
    }
    if (format == "dot") return emit_dot(g);
    if (format == "json") return emit_json(g);
    throw input_error("unknown format '" + format + "'");
}

}  // namespace

PYBIND11_MODULE(_gabdyn, m) {
    m.doc() = "Gabrielov numbers and Coxeter-Dynkin diagrams of cusp singularities (exact arithmetic)";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<verification_error>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<CuspTriple>(m, "CuspTriple")
        .def(py::init<long, long, long>(), py::arg("g1"), py::arg("g2"), py::arg("g3"))
        .def_property_readonly("gamma_prime",
                               [](const CuspTriple& t) {
                                   const auto& g = t.gamma_prime();
                                   return py::make_tuple(g[0], g[1], g[2]);
                               })
        .def_property_readonly("delta", &CuspTriple::delta)
        .def_property_readonly("milnor_number", &CuspTriple::milnor_number)
        .def(py::self == py::self)
        .def("__repr__", [](const CuspTriple& t) { return "CuspTriple" + t.to_string(); });

    m.def("delta_invariant", &delta_invariant, py::arg("g1"), py::arg("g2"), py::arg("g3"));

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init(&make_element), py::arg("a1"), py::arg("a2"), py::arg("a3"))
        .def_property_readonly("exponents",
                               [](const GroupElement& g) {
                                   return py::make_tuple(to_fraction(g.exponent(1)),
                                                         to_fraction(g.exponent(2)),
                                                         to_fraction(g.exponent(3)));
                               })
        .def_property_readonly("age", &GroupElement::age)
        .def_property_readonly("fixed_dim", &GroupElement::fixed_dim)
        .def_property_readonly("order", &GroupElement::order)
        .def(py::self == py::self)
        .def("__repr__", [](const GroupElement& g) { return "GroupElement" + g.to_string(); });

    py::class_<SymmetryGroup>(m, "SymmetryGroup")
        .def_property_readonly("order", &SymmetryGroup::order)
        .def_property_readonly("triple", &SymmetryGroup::triple)
        .def("elements", [](const SymmetryGroup& G) { return G.elements(); })
        .def("__len__", [](const SymmetryGroup& G) { return G.order(); });

    m.def("close_generators", &close_generators, py::arg("triple"), py::arg("generators"));
    m.def("maximal_symmetry_group", &maximal_symmetry_group, py::arg("triple"));
    m.def("enumerate_symmetry_groups", &enumerate_symmetry_groups, py::arg("triple"), py::arg("max_order"));

    py::class_<GroupStats>(m, "GroupStats")
        .def_readonly("order", &GroupStats::order)
        .def_property_readonly("n",
                               [](const GroupStats& s) { return py::make_tuple(s.n[0], s.n[1], s.n[2]); })
        .def_readonly("j_g", &GroupStats::j_g)
        .def_readonly("identity_holds", &GroupStats::identity_holds)
        .def_property_readonly("age_table", [](const GroupStats& s) {
            py::list out;
            for (const auto& e : s.age_table) out.append(py::make_tuple(e.g, e.age, e.fixed_dim));
            return out;
        });
    m.def("compute_stats", &compute_stats, py::arg("group"));

    py::class_<GabrielovNumbers>(m, "GabrielovNumbers")
        .def_property_readonly(
            "gamma",
            [](const GabrielovNumbers& g) { return py::make_tuple(g.gamma[0], g.gamma[1], g.gamma[2]); })
        .def_readonly("multiset", &GabrielovNumbers::multiset);
    m.def("gabrielov_numbers", &gabrielov_numbers, py::arg("triple"), py::arg("group"));

    py::class_<CohomologyDims>(m, "CohomologyDims")
        .def_readonly("h2_y", &CohomologyDims::h2_y)
        .def_readonly("h4_y", &CohomologyDims::h4_y)
        .def_readonly("h3_yz", &CohomologyDims::h3_yz)
        .def_readonly("h2_v_invariant", &CohomologyDims::h2_v_invariant)
        .def_readonly("mu_prime", &CohomologyDims::mu_prime);
    m.def("cohomology_dims", &cohomology_dims, py::arg("triple"), py::arg("group"));

    py::class_<PySpace>(m, "Space")
        .def_property_readonly("name", &PySpace::name)
        .def_property_readonly("dim", &PySpace::dim)
        .def("labels", &PySpace::labels)
        .def("gram", &PySpace::gram)
        .def("__repr__",
             [](const PySpace& s) { return "Space(" + s.name() + ", dim=" + std::to_string(s.dim()) + ")"; });

    m.def("milnor_space", [](const CuspTriple& t) { return PySpace{build_milnor_lattice(t).space}; });
    m.def("milnor_quotient_space",
          [](const CuspTriple& t) { return PySpace{milnor_quotient_space(build_milnor_lattice(t))}; });
    m.def("milnor_delta0",
          [](const CuspTriple& t) { return coords_list(build_milnor_lattice(t).delta0.coords()); });
    m.def("arm_cycle", [](const CuspTriple& t, int axis, long j) {
        return coords_list(arm_cycle(build_milnor_lattice(t), axis, j).coords());
    });
    m.def("orbit_space", [](const CuspTriple& t, const SymmetryGroup& G) {
        return PySpace{build_orbit_space(build_milnor_lattice(t), G).space};
    });
    m.def("z_model_space", [](const CuspTriple& t, const SymmetryGroup& G) {
        return PySpace{build_z_model(build_milnor_lattice(t), G).space};
    });
    m.def("resolution_space", [](const CuspTriple& t, const SymmetryGroup& G) {
        const ZModel zm = build_z_model(build_milnor_lattice(t), G);
        return PySpace{hat_space(zm, build_hat_basis(zm))};
    });

    m.def("fundamental_weight", [](long n) { return coords_list(fundamental_weight(n).coords()); });
    m.def("lambda_sequence", [](long n) {
        py::list out;
        for (const LatticeVector& v : lambda_sequence(n)) out.append(coords_list(v.coords()));
        return out;
    });

    m.def("analyze_json",
          [](const CuspTriple& t, const SymmetryGroup& G) { return render_json(analyze(t, G)); });
    m.def("analyze_text",
          [](const CuspTriple& t, const SymmetryGroup& G) { return render_text(analyze(t, G)); });
    m.def("diagram", &diagram_text, py::arg("triple"), py::arg("group"), py::arg("stage"),
          py::arg("format") = "dot");

    py::class_<PyReport>(m, "Report")
        .def_property_readonly("ok", &PyReport::ok)
        .def("failures", &PyReport::failures)
        .def("checks", &PyReport::checks);

    m.def("verify_case",
          [](const CuspTriple& t, const SymmetryGroup& G) { return PyReport{verify_case(t, G)}; });
    m.def("lambda_lemma_check",
          [](long n_min, long n_max) { return PyReport{lambda_lemma_check(n_min, n_max)}; },
          py::arg("n_min") = 2, py::arg("n_max") = 12);
    m.def("selftest", [](long order_bound) { return PyReport{selftest(order_bound)}; },
          py::arg("order_bound") = 36);
}
