#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oscdirac/clifford.hpp"
#include "oscdirac/dirac.hpp"
#include "oscdirac/lattice.hpp"
#include "oscdirac/spectrum_doc.hpp"
#include "oscdirac/theta.hpp"
#include "oscdirac/verify.hpp"
#include "oscdirac/version.hpp"

namespace py = pybind11;
using namespace oscdirac;

namespace {

LatticeParams make_lattice(int r, int kappa, const std::string& mu, const std::string& nu) {
    return LatticeParams::make_exact(r, kappa, parse_scalar(mu), parse_scalar(nu));
}

SpinStructure make_spin(const std::string& bits) { return SpinStructure::parse(bits); }

}  // namespace

PYBIND11_MODULE(_oscdirac, m) {
    m.doc() = "spectra of the cubic Dirac operator family on oscillator-group quotients";
    m.attr("__version__") = kVersion;

    py::class_<OscElement>(m, "OscElement")
        .def(py::init([](complexd xi, double z, double t) {
                 return OscElement{xi, z, t};
             }),
             py::arg("xi") = complexd(0, 0), py::arg("z") = 0.0, py::arg("t") = 0.0)
        .def_readwrite("xi", &OscElement::xi)
        .def_readwrite("z", &OscElement::z)
        .def_readwrite("t", &OscElement::t)
        .def("__repr__", [](const OscElement& a) {
            return "OscElement(xi=(" + std::to_string(a.xi.real()) + "+" + std::to_string(a.xi.imag()) +
                   "j), z=" + std::to_string(a.z) + ", t=" + std::to_string(a.t) + ")";
        });

    py::class_<OscMElement>(m, "OscMElement")
        .def(py::init([](double x, double y, double z, double t) {
                 return OscMElement{x, y, z, t};
             }),
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0, py::arg("t") = 0.0)
        .def_readwrite("x", &OscMElement::x)
        .def_readwrite("y", &OscMElement::y)
        .def_readwrite("z", &OscMElement::z)
        .def_readwrite("t", &OscMElement::t);

    m.def("osc_multiply", &osc_multiply);
    m.def("osc_inverse", &osc_inverse);
    m.def("oscm_multiply", &oscm_multiply);
    m.def("oscm_inverse", &oscm_inverse);
    m.def("phi_iso", &phi_iso);
    m.def("phi_iso_inverse", &phi_iso_inverse);

    py::class_<LieVec>(m, "LieVec")
        .def(py::init([](double z, double x, double y, double t) {
                 return LieVec{z, x, y, t};
             }),
             py::arg("z") = 0.0, py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("t") = 0.0)
        .def_readwrite("z", &LieVec::z)
        .def_readwrite("x", &LieVec::x)
        .def_readwrite("y", &LieVec::y)
        .def_readwrite("t", &LieVec::t)
        .def_static("Z", &LieVec::Z)
        .def_static("X", &LieVec::X)
        .def_static("Y", &LieVec::Y)
        .def_static("T", &LieVec::T);

    m.def("bracket", &bracket);
    m.def("metric", &metric);
    m.def("gamma", [](const LieVec& v) -> CMat { return gamma(v); });
    m.def("cubic_element", []() -> CMat { return cubic_element(); });

    py::class_<IrrepLabel>(m, "IrrepLabel")
        .def_static("C", &IrrepLabel::C, py::arg("d"))
        .def_static("S", &IrrepLabel::S, py::arg("a"), py::arg("tau"))
        .def_static("F", &IrrepLabel::F, py::arg("c"), py::arg("d"))
        .def("__repr__", &IrrepLabel::str)
        .def_readonly("d", &IrrepLabel::d)
        .def_readonly("a", &IrrepLabel::a)
        .def_readonly("tau", &IrrepLabel::tau)
        .def_readonly("c", &IrrepLabel::c);

    py::class_<RepTruncation>(m, "RepTruncation")
        .def_readonly("label", &RepTruncation::label)
        .def_readonly("N", &RepTruncation::N)
        .def_readonly("dim", &RepTruncation::dim)
        .def_readonly("basis_offset", &RepTruncation::basis_offset)
        .def_readonly("op_Z", &RepTruncation::op_Z)
        .def_readonly("op_T", &RepTruncation::op_T)
        .def_readonly("op_Nplus", &RepTruncation::op_Nplus)
        .def_readonly("op_Nminus", &RepTruncation::op_Nminus)
        .def("op_X", &RepTruncation::op_X)
        .def("op_Y", &RepTruncation::op_Y);

    m.def("build_truncation", &build_truncation, py::arg("label"), py::arg("N"));
    m.def("casimir_matrix", &casimir_matrix);
    m.def("casimir_value", &casimir_value);

    py::class_<DiracMatrix>(m, "DiracMatrix")
        .def_readonly("t", &DiracMatrix::t)
        .def_readonly("matrix", &DiracMatrix::matrix);

    m.def("build_dirac", &build_dirac, py::arg("rep"), py::arg("t") = 1.0 / 3.0);
    m.def("dt_block_eigenvalues", &dt_block_eigenvalues, py::arg("label"), py::arg("t"));
    m.def("projection_norm_growth", &projection_norm_growth, py::arg("rep"), py::arg("upto_n"));

    py::class_<LatticeParams>(m, "LatticeParams")
        .def(py::init(&make_lattice), py::arg("r"), py::arg("kappa"), py::arg("mu") = "0",
             py::arg("nu") = "1")
        .def_readonly("r", &LatticeParams::r)
        .def_readonly("kappa", &LatticeParams::kappa)
        .def_property_readonly("mu", [](const LatticeParams& l) { return l.mu.value; })
        .def_property_readonly("nu", [](const LatticeParams& l) { return l.nu.value; })
        .def("beta", &LatticeParams::beta);

    py::class_<SpinStructure>(m, "SpinStructure")
        .def(py::init(&make_spin), py::arg("bits"))
        .def("__repr__", [](const SpinStructure& s) { return "SpinStructure(" + s.str() + ")"; })
        .def_readonly("e1", &SpinStructure::e1)
        .def_readonly("e2", &SpinStructure::e2)
        .def_readonly("e3", &SpinStructure::e3)
        .def_readonly("e4", &SpinStructure::e4);

    py::class_<SpectralLine>(m, "SpectralLine")
        .def_readonly("eigenvalue", &SpectralLine::eigenvalue)
        .def_readonly("multiplicity", &SpectralLine::multiplicity)
        .def_readonly("infinite_family", &SpectralLine::infinite_family)
        .def_property_readonly("sources",
                               [](const SpectralLine& s) {
                                   std::vector<std::string> out;
                                   for (const auto& l : s.sources) out.push_back(l.str());
                                   return out;
                               })
        .def("__repr__", [](const SpectralLine& s) {
            return "SpectralLine(" + format_sig15(s.eigenvalue.real()) + "+" +
                   format_sig15(s.eigenvalue.imag()) + "j, mult=" +
                   (s.infinite_family ? std::string("inf") : std::to_string(s.multiplicity)) + ")";
        });

    m.def("norm_form", &norm_form, py::arg("lattice"), py::arg("k"), py::arg("l"));
    m.def(
        "alpha_counts",
        [](const LatticeParams& l, double a, double tol) {
            AlphaCounts c = alpha_counts(l, a, tol);
            return py::make_tuple(c.alpha, c.alpha0, c.alpha1, c.alpha2);
        },
        py::arg("lattice"), py::arg("a"), py::arg("tol") = 0.0);
    m.def(
        "spectral_sets",
        [](const LatticeParams& l, double cutoff) {
            SpectralSets s = spectral_sets(l, cutoff);
            auto pack = [](const std::vector<SpectralSets::Entry>& v) {
                std::vector<std::pair<double, int>> out;
                for (const auto& e : v) out.push_back({e.value, e.count});
                return out;
            };
            return py::make_tuple(pack(s.A), pack(s.A0), pack(s.A1), pack(s.A2));
        },
        py::arg("lattice"), py::arg("cutoff"));
    m.def("mult_C", &mult_C);
    m.def("mult_S", &mult_S);
    m.def("mult_F", &mult_F);
    m.def("normalize_spin", &normalize_spin);
    m.def("casimir_spectrum", &casimir_spectrum, py::arg("lattice"), py::arg("eps"), py::arg("cutoff"));
    m.def("dirac_point_spectrum", &dirac_point_spectrum, py::arg("lattice"), py::arg("eps"), py::arg("t"),
          py::arg("cutoff"));
    m.def("symmetry_check",
          [](const LatticeParams& l, const SpinStructure& eps) {
              return std::string(symmetry_class_name(symmetry_check(l, eps)));
          });
    m.def(
        "shifted_spectrum",
        [](const LatticeParams& l, const SpinStructure& eps, const std::string& utilde, int count) {
            ShiftedResult r = shifted_spectrum(l, eps, parse_scalar(utilde), count);
            std::vector<std::tuple<std::int64_t, std::int64_t, double>> conv;
            for (const auto& c : r.convergents) conv.push_back({c.m, c.n, c.value});
            return py::make_tuple(r.eigenvalues, conv, r.rational_warning);
        },
        py::arg("lattice"), py::arg("eps"), py::arg("utilde"), py::arg("count"));

    py::class_<ThetaParams>(m, "ThetaParams")
        .def(py::init([](int rp, int kp, double mu, double nu) {
                 return ThetaParams{rp, kp, mu, nu};
             }),
             py::arg("r_prime"), py::arg("kappa_prime"), py::arg("mu") = 0.0, py::arg("nu") = 1.0)
        .def_readwrite("r_prime", &ThetaParams::r_prime)
        .def_readwrite("kappa_prime", &ThetaParams::kappa_prime)
        .def_readwrite("mu", &ThetaParams::mu)
        .def_readwrite("nu", &ThetaParams::nu);

    m.def(
        "eval_theta",
        [](int mm, int n, int k, const OscMElement& g, const ThetaParams& p, int J) {
            return eval_theta({mm, n, k, J}, g, p);
        },
        py::arg("m"), py::arg("n"), py::arg("k"), py::arg("point"), py::arg("params"), py::arg("J") = 0);

    m.def(
        "spectrum_json",
        [](const LatticeParams& l, const SpinStructure& eps, const std::string& op, double t,
           double cutoff) { return to_json(compute_spectrum_document(l, eps, op, t, cutoff)); },
        py::arg("lattice"), py::arg("eps"), py::arg("op") = "casimir", py::arg("t") = 1.0 / 3.0,
        py::arg("cutoff") = 50.0);

    m.def(
        "verify",
        [](const std::string& suite, int trunc, unsigned seed) {
            std::vector<std::tuple<std::string, double, double, bool>> out;
            for (const auto& c : verify_suite(suite, trunc, seed))
                out.push_back({c.name, c.measured, c.threshold, c.pass});
            return out;
        },
        py::arg("suite") = "all", py::arg("trunc") = 16, py::arg("seed") = 7);

    py::register_exception<InvalidSpinStructure>(m, "InvalidSpinStructureError");
    py::register_exception<RouteConsistencyError>(m, "RouteConsistencyErrorPy");
}
