#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>
#include <sstream>

#include "fermat/constants.hpp"
#include "fermat/parser.hpp"
#include "fermat/verify.hpp"

namespace py = pybind11;

namespace {

struct PyMatrix {
    fermat::Matrix m;
};

struct PyElem {
    fermat::RingElem value;
};

struct PyDerivation {
    fermat::Derivation d;
};

struct PyLinear {
    fermat::LinearDerivation d;
};

struct PyKernelReport {
    fermat::KernelReport report;
};

struct PyRing {
    fermat::RingSpecPtr spec;

    PyElem parse(const std::string& text) const { return {fermat::parse_expression(text, spec)}; }
};

PyLinear linear_from_text(const fermat::RingSpecPtr& spec, const std::string& matrix_text) {
    const fermat::Matrix m = fermat::parse_matrix(matrix_text, spec->field());
    return {fermat::LinearDerivation::from_matrix(spec, m)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for derivations of C[X1..Xn]/(X1^m1+...+Xn^mn)";

    py::register_exception<fermat::ParseError>(m, "ExpressionParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fermat::ParseError&) {
            std::rethrow_exception(p);  // handled by the registered exception above
        } catch (const fermat::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("cyclotomic_polynomial", [](unsigned k) {
        std::vector<std::string> out;
        for (const fermat::BigInt& c : fermat::cyclotomic_polynomial(k)) out.push_back(c.str());
        return out;
    }, py::arg("k"), "Ascending coefficients of the k-th cyclotomic polynomial, as strings");

    py::class_<PyMatrix>(m, "Matrix")
        .def_property_readonly("rows", [](const PyMatrix& s) { return s.m.rows(); })
        .def_property_readonly("cols", [](const PyMatrix& s) { return s.m.cols(); })
        .def("entry", [](const PyMatrix& s, unsigned r, unsigned c) { return s.m.at(r, c).str(); })
        .def("text", [](const PyMatrix& s) { return s.m.text(); })
        .def("det", [](const PyMatrix& s) { return fermat::det(s.m).str(); })
        .def("power", [](const PyMatrix& s, unsigned e) { return PyMatrix{fermat::matrix_power(s.m, e)}; })
        .def("is_zero", [](const PyMatrix& s) { return s.m.is_zero(); })
        .def("is_skew_symmetric", [](const PyMatrix& s) { return s.m.is_skew_symmetric(); })
        .def("is_nilpotent", [](const PyMatrix& s) {
            const fermat::NilpotencyResult r = fermat::is_nilpotent(s.m);
            return py::make_tuple(r.nilpotent, r.index ? py::cast(*r.index) : py::none());
        })
        .def("__str__", [](const PyMatrix& s) { return s.m.str(); })
        .def("__repr__", [](const PyMatrix& s) { return "Matrix(\"" + s.m.text() + "\")"; });

    py::class_<PyElem>(m, "Elem")
        .def("__str__", [](const PyElem& s) { return s.value.str(); })
        .def("__repr__", [](const PyElem& s) { return "Elem(\"" + s.value.str() + "\")"; })
        .def("__add__", [](const PyElem& a, const PyElem& b) { return PyElem{a.value + b.value}; })
        .def("__sub__", [](const PyElem& a, const PyElem& b) { return PyElem{a.value - b.value}; })
        .def("__mul__", [](const PyElem& a, const PyElem& b) { return PyElem{a.value * b.value}; })
        .def("__neg__", [](const PyElem& a) { return PyElem{-a.value}; })
        .def("__eq__", [](const PyElem& a, const PyElem& b) { return a.value == b.value; })
        .def("is_zero", [](const PyElem& s) { return s.value.is_zero(); })
        .def("degree", [](const PyElem& s) { return s.value.degree(); })
        .def("is_homogeneous", [](const PyElem& s) {
            unsigned k = 0;
            const bool h = s.value.is_homogeneous(&k);
            return py::make_tuple(h, k);
        })
        .def("homogeneous_components", [](const PyElem& s) {
            py::dict out;
            for (const auto& [k, part] : s.value.homogeneous_components())
                out[py::cast(k)] = PyElem{part};
            return out;
        });

    py::class_<PyDerivation>(m, "Derivation")
        .def_property_readonly("certified", [](const PyDerivation& s) { return s.d.certified(); })
        .def("images", [](const PyDerivation& s) {
            std::vector<PyElem> out;
            for (const fermat::RingElem& im : s.d.images()) out.push_back({im});
            return out;
        })
        .def("apply", [](const PyDerivation& s, const PyElem& f) { return PyElem{s.d.apply(f.value)}; })
        .def("apply_power", [](const PyDerivation& s, unsigned e, const PyElem& f) {
            return PyElem{fermat::apply_power(s.d, e, f.value)};
        });

    py::class_<PyKernelReport>(m, "KernelReport")
        .def_property_readonly("trivial", [](const PyKernelReport& s) { return s.report.trivial; })
        .def_property_readonly("max_degree", [](const PyKernelReport& s) { return s.report.max_degree; })
        .def_property_readonly("first_nontrivial", [](const PyKernelReport& s) -> py::object {
            return s.report.first_nontrivial ? py::cast(*s.report.first_nontrivial) : py::none();
        })
        .def("basis", [](const PyKernelReport& s, unsigned k) {
            std::vector<std::string> out;
            for (const fermat::RingElem& e : s.report.kernels.at(k)) out.push_back(e.str());
            return out;
        })
        .def("__str__", [](const PyKernelReport& s) { return s.report.str(); });

    py::class_<PyLinear>(m, "LinearDerivation")
        .def_property_readonly("matrix", [](const PyLinear& s) { return PyMatrix{s.d.matrix()}; })
        .def_property_readonly("derivation", [](const PyLinear& s) { return PyDerivation{s.d.derivation()}; })
        .def("apply", [](const PyLinear& s, const PyElem& f) { return PyElem{s.d.apply(f.value)}; })
        .def("is_locally_nilpotent", [](const PyLinear& s) { return fermat::is_locally_nilpotent(s.d); })
        .def("classify", [](const PyLinear& s) {
            const fermat::Classification c = fermat::classify(s.d);
            py::dict out;
            switch (c.kind) {
                case fermat::Classification::Kind::diagonal:
                    out["kind"] = "diagonal";
                    out["alpha"] = c.alpha->str();
                    break;
                case fermat::Classification::Kind::scalar_plus_skew:
                    out["kind"] = "scalar+skew";
                    out["alpha"] = c.parts->alpha.str();
                    out["skew"] = PyMatrix{c.parts->skew};
                    break;
                case fermat::Classification::Kind::unclassified:
                    out["kind"] = "unclassified";
                    break;
            }
            return out;
        })
        .def("decompose", [](const PyLinear& s) {
            const fermat::Decomposition parts = fermat::decompose(s.d);
            return py::make_tuple(parts.alpha.str(), PyMatrix{parts.skew});
        })
        .def("restrict_to_vk", [](const PyLinear& s, unsigned k) {
            return PyMatrix{fermat::restrict_to_vk(s.d, k).matrix};
        })
        .def("kernel", [](const PyLinear& s, unsigned max_degree) {
            return PyKernelReport{fermat::kernel_up_to_degree(s.d, max_degree)};
        }, py::arg("max_degree") = 6)
        .def("find_alpha", [](const PyLinear& s, unsigned max_degree,
                              const std::vector<std::string>& candidates) -> py::object {
            std::vector<fermat::CycloNum> parsed;
            for (const std::string& c : candidates)
                parsed.push_back(fermat::parse_coefficient(c, s.d.spec()->field()));
            const auto found = fermat::find_alpha(s.d, max_degree, parsed);
            return found ? py::cast(found->str()) : py::none();
        }, py::arg("max_degree"), py::arg("candidates"));

    py::class_<PyRing>(m, "Ring")
        .def(py::init([](unsigned n, const std::vector<unsigned>& exponents, unsigned conductor) {
                 return PyRing{fermat::RingSpec::make(n, exponents, conductor)};
             }),
             py::arg("n"), py::arg("m"), py::arg("conductor") = 4)
        .def_property_readonly("n", [](const PyRing& s) { return s.spec->n(); })
        .def_property_readonly("m", [](const PyRing& s) { return s.spec->exponents(); })
        .def_property_readonly("conductor", [](const PyRing& s) { return s.spec->field()->conductor(); })
        .def("__repr__", [](const PyRing& s) { return "Ring(\"" + s.spec->str() + "\")"; })
        .def("parse", &PyRing::parse, py::arg("text"))
        .def("zero", [](const PyRing& s) { return PyElem{fermat::RingElem::zero(s.spec)}; })
        .def("one", [](const PyRing& s) { return PyElem{fermat::RingElem::one(s.spec)}; })
        .def("var", [](const PyRing& s, unsigned i) { return PyElem{fermat::RingElem::variable(s.spec, i)}; })
        .def("vk_basis", [](const PyRing& s, unsigned k) {
            std::vector<std::string> out;
            for (const fermat::Monomial& mono : fermat::vk_basis(s.spec, k)) out.push_back(mono.str());
            return out;
        })
        .def("vk_dim", [](const PyRing& s, unsigned k) { return fermat::vk_dimension(s.spec, k); })
        .def("epsilon", [](const PyRing& s) {
            return PyDerivation{fermat::Derivation::generator_epsilon(s.spec)};
        })
        .def("dij", [](const PyRing& s, unsigned i, unsigned j) {
            return PyDerivation{fermat::Derivation::generator_dij(s.spec, i, j)};
        })
        .def("derivation", [](const PyRing& s, const std::vector<PyElem>& images) {
            std::vector<fermat::RingElem> unwrapped;
            for (const PyElem& e : images) unwrapped.push_back(e.value);
            return PyDerivation{fermat::Derivation(s.spec, std::move(unwrapped))};
        })
        .def("linear", [](const PyRing& s, const std::string& matrix_text) {
            return linear_from_text(s.spec, matrix_text);
        }, py::arg("matrix"))
        .def("diagonal", [](const PyRing& s, const std::string& alpha) {
            return PyLinear{fermat::LinearDerivation::diagonal(
                s.spec, fermat::parse_coefficient(alpha, s.spec->field()))};
        }, py::arg("alpha") = "1")
        .def("linear_space", [](const PyRing& s) {
            std::vector<PyMatrix> out;
            for (const fermat::Matrix& b : fermat::linear_derivation_space(s.spec)) out.push_back({b});
            return out;
        });

    m.def("family_odd", [](unsigned n, unsigned conductor) {
        return PyLinear{fermat::build_odd_family(n, fermat::FieldSpec::make(conductor))};
    }, py::arg("n"), py::arg("conductor") = 4);
    m.def("family_even", [](unsigned n, unsigned conductor) {
        if (conductor == 0) conductor = std::lcm(4u, n - 1);
        return PyLinear{fermat::build_even_family(n, fermat::FieldSpec::make(conductor))};
    }, py::arg("n"), py::arg("conductor") = 0);

    m.def("verify", [](unsigned max_degree, unsigned bound) {
        fermat::VerifyOptions options;
        options.max_degree = max_degree;
        options.triangular_bound = bound;
        std::ostringstream out;
        const fermat::VerifyResult result = fermat::run_verify_suite(options, out);
        return py::make_tuple(result.all_passed, out.str());
    }, py::arg("max_degree") = 6, py::arg("bound") = 2);
}
