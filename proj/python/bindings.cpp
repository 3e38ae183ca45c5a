#include "grasscalc/grassmann.hpp"
#include "grasscalc/json_io.hpp"
#include "grasscalc/segre_ineq.hpp"
#include "grasscalc/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace grasscalc;

namespace {

py::object big_to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object rational_to_py(const Rational& value) {
    return py::module_::import("fractions").attr("Fraction")(rational_to_string(value));
}

Rational py_to_rational(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj))
        return rational_from_string(py::str(obj).cast<std::string>());
    if (py::isinstance<py::str>(obj))
        return rational_from_string(obj.cast<std::string>());
    // Fraction or anything exposing numerator/denominator
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        const std::string num = py::str(obj.attr("numerator")).cast<std::string>();
        const std::string den = py::str(obj.attr("denominator")).cast<std::string>();
        return rational_from_string(num + "/" + den);
    }
    throw py::type_error("expected int, str or Fraction for an exact rational");
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

// pybind11 holders must be non-const; the ring type is immutable, so the
// const is reapplied implicitly whenever a PyRing crosses into the core API.
using PyRing = std::shared_ptr<GradedRing>;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact intersection calculus on Grassmann bundles";

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init<std::vector<unsigned>>(), py::arg("parts"))
        .def_static("rectangle", &Partition::rectangle, py::arg("rows"), py::arg("entry"))
        .def_property_readonly("parts", &Partition::parts)
        .def("weight", &Partition::weight)
        .def("length", &Partition::length)
        .def("conjugate", &Partition::conjugate)
        .def("contains", &Partition::contains)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const Partition& p) { return "Partition" + p.str(); })
        .def("__hash__", [](const Partition& p) {
            size_t h = 0;
            for (unsigned part : p.parts()) h = h * 1000003 + part;
            return h;
        });

    m.def("add_padded", &add_padded, py::arg("a"), py::arg("b"), py::arg("pad_to"));
    m.def("pieri_add_box", &pieri_add_box, py::arg("lam"), py::arg("max_rows"));
    m.def("remove_corner_results", &remove_corner_results, py::arg("lam"));
    m.def("partitions_of", &partitions_of, py::arg("weight"), py::arg("max_length"));
    m.def(
        "syt_count_formula",
        [](const Partition& lam) { return big_to_py(syt_count_formula(lam)); },
        py::arg("lam"));
    m.def(
        "syt_count_bruteforce",
        [](const Partition& lam, unsigned cap) {
            return big_to_py(syt_count_bruteforce(lam, cap));
        },
        py::arg("lam"), py::arg("cap") = 12);

    py::class_<GradedRing, PyRing>(m, "GradedRing")
        .def_static(
            "create",
            [](const std::vector<std::pair<std::string, unsigned>>& gens, unsigned truncation) {
                std::vector<Generator> table;
                for (const auto& [name, degree] : gens) table.push_back({name, degree});
                return std::const_pointer_cast<GradedRing>(
                    GradedRing::create(std::move(table), truncation));
            },
            py::arg("generators"), py::arg("truncation"))
        .def_property_readonly("truncation", &GradedRing::truncation)
        .def_property_readonly("generator_names", [](const GradedRing& ring) {
            std::vector<std::string> names;
            for (const Generator& g : ring.generators()) names.push_back(g.name);
            return names;
        });

    py::class_<GradedElement>(m, "GradedElement")
        .def_static("zero", [](const PyRing& ring) { return GradedElement(ring); })
        .def_static("unit", [](const PyRing& ring) { return GradedElement::unit(ring); })
        .def_static(
            "constant",
            [](const PyRing& ring, const py::handle& value) {
                return GradedElement::constant(ring, py_to_rational(value));
            },
            py::arg("ring"), py::arg("value"))
        .def_static(
            "generator",
            [](const PyRing& ring, const std::string& name) {
                return GradedElement::generator(ring, name);
            },
            py::arg("ring"), py::arg("name"))
        .def("is_zero", &GradedElement::is_zero)
        .def("degree_part", &GradedElement::degree_part, py::arg("k"))
        .def("homogeneous_degree", &GradedElement::homogeneous_degree)
        .def("depends_on", &GradedElement::depends_on, py::arg("name"))
        .def(
            "substitute",
            [](const GradedElement& e, const std::string& name, const py::handle& value) {
                return e.substitute(name, py_to_rational(value));
            },
            py::arg("name"), py::arg("value"))
        .def("to_json", [](const GradedElement& e) { return json_to_py(element_to_json(e)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__mul__",
             [](const GradedElement& e, const py::handle& scalar) {
                 return e * py_to_rational(scalar);
             })
        .def("__rmul__",
             [](const GradedElement& e, const py::handle& scalar) {
                 return e * py_to_rational(scalar);
             })
        .def("__repr__", &GradedElement::str)
        .def("__str__", &GradedElement::str);

    py::class_<ClassSeries>(m, "ClassSeries")
        .def_static("one", [](const PyRing& ring) { return ClassSeries::one(ring); })
        .def("component", &ClassSeries::component, py::arg("k"))
        .def("total", &ClassSeries::total)
        .def("inverse", &ClassSeries::inverse)
        .def("unsigned_segre", &ClassSeries::unsigned_segre);

    m.def(
        "total_class_from_generators",
        [](const PyRing& ring, const std::vector<std::string>& names) {
            return total_class_from_generators(ring, names);
        },
        py::arg("ring"), py::arg("names"));
    m.def(
        "schur_det",
        [](const std::vector<int>& seq, const ClassSeries& series) {
            return schur_det(seq, series);
        },
        py::arg("seq"), py::arg("series"));
    m.def("discriminant", &discriminant, py::arg("rank"), py::arg("c1"), py::arg("c2"));

    py::class_<GrassSetup>(m, "GrassSetup")
        .def(py::init<unsigned, unsigned, unsigned>(), py::arg("n"), py::arg("r"), py::arg("d"))
        .def_readonly("base_dim", &GrassSetup::base_dim)
        .def_readonly("rank", &GrassSetup::rank)
        .def_readonly("quot_rank", &GrassSetup::quot_rank)
        .def("rel_dim", &GrassSetup::rel_dim)
        .def("m", &GrassSetup::m)
        .def("epsilon", &GrassSetup::epsilon);

    py::class_<FiberedClass>(m, "FiberedClass")
        .def(py::init([](const PyRing& ring, unsigned quot_rank) {
                 return FiberedClass(ring, quot_rank);
             }),
             py::arg("ring"), py::arg("quot_rank"))
        .def("add_term", &FiberedClass::add_term, py::arg("mu"), py::arg("coeff"))
        .def("coefficient", &FiberedClass::coefficient, py::arg("mu"))
        .def("is_zero", &FiberedClass::is_zero)
        .def("homogeneous_degree", &FiberedClass::homogeneous_degree)
        .def("to_json", [](const FiberedClass& f) { return json_to_py(fibered_to_json(f)); })
        .def(py::self == py::self)
        .def("__repr__", [](const FiberedClass& f) {
            std::ostringstream out;
            out << "FiberedClass{";
            bool first = true;
            for (const auto& [mu, coeff] : f.terms()) {
                if (!first) out << ", ";
                out << mu.str() << ": " << coeff.str();
                first = false;
            }
            out << "}";
            return out.str();
        });

    m.def(
        "chi",
        [](const PyRing& ring, const GrassSetup& setup) { return chi(ring, setup); },
        py::arg("ring"), py::arg("setup"));
    m.def("theta", &theta, py::arg("setup"), py::arg("c1E"));
    m.def("mul_by_chi", &mul_by_chi, py::arg("F"));
    m.def("mul_by_pullback", &mul_by_pullback, py::arg("F"), py::arg("alpha"));
    m.def("mul_linear", &mul_linear, py::arg("F"), py::arg("linear"));
    m.def("power", &power, py::arg("F"), py::arg("N"));
    m.def("pushforward", &pushforward, py::arg("F"), py::arg("setup"), py::arg("segreE"));
    m.def("pushforward_chi_power_closedform", &pushforward_chi_power_closedform,
          py::arg("N"), py::arg("setup"), py::arg("segreE"));
    m.def("leray_hirsch_divisor", &leray_hirsch_divisor, py::arg("setup"), py::arg("b0"),
          py::arg("b1"));
    m.def("d1_polynomial_class", &d1_polynomial_class, py::arg("setup"), py::arg("betas"));
    m.def(
        "f_coefficient_identities",
        [](const GrassSetup& setup) {
            const FNumberIdentities ids = f_coefficient_identities(setup);
            py::dict out;
            out["box"] = py::make_tuple(rational_to_py(ids.box_lhs),
                                        rational_to_py(ids.box_rhs));
            out["vertical"] = py::make_tuple(rational_to_py(ids.vertical_lhs),
                                             rational_to_py(ids.vertical_rhs));
            out["horizontal"] = py::make_tuple(rational_to_py(ids.horizontal_lhs),
                                               rational_to_py(ids.horizontal_rhs));
            return out;
        },
        py::arg("setup"));

    m.def(
        "run_suite",
        [](const py::object& config) {
            SuiteConfig parsed;
            if (!config.is_none()) {
                const std::string text =
                    py::module_::import("json").attr("dumps")(config).cast<std::string>();
                parsed = SuiteConfig::from_json(nlohmann::json::parse(text));
            }
            return json_to_py(suite_to_json(run_suite(parsed)));
        },
        py::arg("config") = py::none());

    m.def("segre_lhs_symbolic", &segre_lhs_symbolic, py::arg("r"), py::arg("n"),
          py::arg("k"), py::arg("N"));
    m.def(
        "evaluate",
        [](const GradedElement& expr, const py::dict& table) {
            IntersectionTable parsed;
            for (const auto& [key, value] : table)
                parsed.insert(key.cast<std::string>(), py_to_rational(value));
            return rational_to_py(evaluate(expr, parsed));
        },
        py::arg("expr"), py::arg("table"));
    m.def(
        "check_inequalities",
        [](unsigned r, unsigned n, unsigned N, const py::dict& table) {
            IntersectionTable parsed;
            for (const auto& [key, value] : table)
                parsed.insert(key.cast<std::string>(), py_to_rational(value));
            return json_to_py(inequality_report_to_json(check_inequalities(r, n, N, parsed)));
        },
        py::arg("r"), py::arg("n"), py::arg("N"), py::arg("table"));

    py::register_exception<MissingMonomialsError>(m, "MissingMonomialsError");
}
