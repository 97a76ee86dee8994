#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskcp/dynamics.hpp"
#include "diskcp/errors.hpp"
#include "diskcp/json_io.hpp"
#include "diskcp/normal_forms.hpp"
#include "diskcp/operator_models.hpp"
#include "diskcp/spectra.hpp"

namespace py = pybind11;
using namespace diskcp;

namespace {

CrossedElement element(const std::string& text) { return io::element_from_json(io::parse(text)); }

RepKind make_kind(const std::string& kind, Complex x, py::dict opts) {
    auto get = [&](const char* key, auto fallback) {
        return opts.contains(key) ? opts[key].cast<decltype(fallback)>() : fallback;
    };
    if (kind == "hyperbolic") return HyperbolicOrbit{x};
    if (kind == "parabolic") return ParabolicOrbit{x};
    if (kind == "character") return Character{get("fixed_point", Complex(1.0, 0.0)), get("theta", 0.0)};
    if (kind == "elliptic-circle") {
        return EllipticCircle{get("radius", std::abs(x)), get("fiber", Complex(1.0, 0.0)),
                              get("u_phase", Complex(1.0, 0.0))};
    }
    if (kind == "elliptic-rational") {
        return EllipticRational{get("p", std::int64_t{0}), get("q", std::int64_t{1}), get("eta", Complex(1.0, 0.0)),
                                get("lambda", Complex(1.0, 0.0))};
    }
    throw ParseError("unknown representation kind '" + kind + "'");
}

py::dict laurent_dict(const Laurent& l) {
    py::dict d;
    for (const auto& [n, c] : l.coefficients()) d[py::int_(n)] = c;
    return d;
}

}  // namespace

PYBIND11_MODULE(_diskcp, m) {
    m.doc() = "Disk automorphisms, their crossed products and finite operator models.";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    static py::exception<DomainError> domain(m, "DomainError", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<KindMismatch> mismatch(m, "KindMismatch", base.ptr());
    static py::exception<ClassError> cls(m, "ClassError", base.ptr());
    static py::exception<RationalityRequired> rational(m, "RationalityRequired", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            py::set_error(domain, e.what());
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const KindMismatch& e) {
            py::set_error(mismatch, e.what());
        } catch (const ClassError& e) {
            py::set_error(cls, e.what());
        } catch (const RationalityRequired& e) {
            py::set_error(rational, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::class_<DiskAutomorphism>(m, "DiskAutomorphism")
        .def(py::init<double, Complex>(), py::arg("theta") = 0.0, py::arg("z0") = Complex{})
        .def_static("rational", &DiskAutomorphism::rational, py::arg("p"), py::arg("q"), py::arg("z0") = Complex{})
        .def_static("hyperbolic_normal_form", &DiskAutomorphism::hyperbolic_normal_form, py::arg("a"))
        .def_static("parabolic_plus", &DiskAutomorphism::parabolic_plus)
        .def_static("parabolic_minus", &DiskAutomorphism::parabolic_minus)
        .def_property_readonly("theta", &DiskAutomorphism::theta)
        .def_property_readonly("z0", &DiskAutomorphism::z0)
        .def_property_readonly("lambda_", &DiskAutomorphism::lambda)
        .def("__call__", &DiskAutomorphism::evaluate)
        .def("derivative", &DiskAutomorphism::derivative)
        .def("inverse", &DiskAutomorphism::inverse)
        .def("power", [](const DiskAutomorphism& f, std::int64_t n, Complex z) { return apply_power(f, n, z); })
        .def("__repr__", [](const DiskAutomorphism& f) {
            return "DiskAutomorphism(" + io::to_json(f).dump() + ")";
        });

    m.def("classify", [](const DiskAutomorphism& f, double tol) {
        const AutomorphismClass c = classify(f, tol);
        return py::make_tuple(to_string(c.tag), c.margin);
    }, py::arg("phi"), py::arg("tol") = 1e-12);
    m.def("fixed_points", [](const DiskAutomorphism& f) {
        const FixedPointData d = fixed_points(f);
        return py::make_tuple(d.points, d.multipliers);
    });
    m.def("normal_form", [](const DiskAutomorphism& f) {
        const NormalFormResult r = normal_form(f);
        py::dict d;
        d["class"] = to_string(r.cls.tag);
        d["canonical"] = r.canonical;
        d["residual"] = r.residual;
        std::visit([&](const auto& inv) {
            using T = std::decay_t<decltype(inv)>;
            if constexpr (std::is_same_v<T, HyperbolicInvariant>) d["a"] = inv.a;
            if constexpr (std::is_same_v<T, EllipticInvariant>) d["mu"] = inv.mu;
            if constexpr (std::is_same_v<T, ParabolicInvariant>) d["orientation"] = inv.orientation;
        }, r.invariant);
        return d;
    });
    m.def("orbit", &orbit, py::arg("phi"), py::arg("x"), py::arg("n_lo"), py::arg("n_hi"));
    m.def("canonical_point", [](const DiskAutomorphism& f, Complex z) {
        const CanonicalOrbitPoint c = canonical_point(f, z);
        return py::make_tuple(c.representative, c.index);
    });

    m.def("represent", [](const std::string& elem, const DiskAutomorphism& f, const std::string& kind, Complex x,
                          std::int64_t n, py::dict opts) {
        return represent(element(elem), f, make_kind(kind, x, opts), n).matrix;
    }, py::arg("element"), py::arg("phi"), py::arg("kind"), py::arg("x") = Complex{}, py::arg("N") = 10,
          py::arg("options") = py::dict());
    m.def("covariance_residual", [](const DiskAutomorphism& f, const std::string& kind, Complex x, std::int64_t n,
                                    py::dict opts) {
        return covariance_residual(f, make_kind(kind, x, opts), n);
    }, py::arg("phi"), py::arg("kind"), py::arg("x") = Complex{}, py::arg("N") = 10,
          py::arg("options") = py::dict());
    m.def("symbol", [](const std::string& elem, const DiskAutomorphism& f) {
        const SymbolPair s = symbol(element(elem), f);
        return py::make_tuple(laurent_dict(s.minus), laurent_dict(s.plus));
    });
    m.def("operator_norm", &operator_norm);

    m.def("spectrum_closure", [](const std::string& text) {
        return io::to_json(closure(io::spectrum_set_from_json(io::parse(text)))).dump();
    });
    m.def("closure_axioms_check", [](const std::string& model, int samples, std::uint64_t seed) {
        return closure_axioms_check(parse_spectrum_model(model), samples, seed).passed();
    }, py::arg("model"), py::arg("samples") = 100, py::arg("seed") = 1);
}
