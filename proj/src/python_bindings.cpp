#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "higgsdt/cli.hpp"
#include "higgsdt/format.hpp"
#include "higgsdt/oracle_p1.hpp"
#include "higgsdt/positive_series.hpp"
#include "higgsdt/zeta.hpp"

namespace py = pybind11;
using namespace higgsdt;

namespace {

py::object rational_to_py(const Rational& c)
{
    if (c.get_den() == 1) {
        return py::int_(py::str(c.get_str()));
    }
    return py::module_::import("fractions").attr("Fraction")(c.get_str());
}

py::list poly_to_py(const LaurentPoly& p)
{
    py::list out;
    for (const auto& [m, c] : p.terms()) {
        out.append(py::make_tuple(monomial_string(*p.vars(), m), rational_to_py(c)));
    }
    return out;
}

CurveParams curve(int genus, int ell, bool canonical)
{
    return canonical ? CurveParams::canonical(genus) : CurveParams::twisted(genus, ell);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact DT invariants of twisted Higgs bundles";

    py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

    m.def(
        "partitions",
        [](int n) {
            std::vector<std::vector<int>> out;
            for (const auto& l : enumerate_partitions(n)) {
                out.emplace_back(l.parts().begin(), l.parts().end());
            }
            return out;
        },
        py::arg("n"), "Partitions of n in a fixed order.");

    m.def(
        "idt",
        [](int genus, int ell, int rmax, bool canonical, bool t_one) {
            std::vector<LaurentPoly> polys;
            {
                py::gil_scoped_release release;
                polys = idt_star(curve(genus, ell, canonical), rmax);
                if (t_one) {
                    for (auto& p : polys) {
                        p = at_t_one(p);
                    }
                }
            }
            py::list out;
            for (const auto& p : polys) {
                out.append(poly_to_py(p));
            }
            return out;
        },
        py::arg("genus"), py::arg("ell") = 1, py::arg("rmax") = 3, py::arg("canonical") = false,
        py::arg("t_one") = false, "IDT_1..IDT_rmax as lists of (monomial, coefficient).");

    m.def(
        "omega",
        [](int genus, int ell, int r, bool canonical) {
            const CurveParams cp = curve(genus, ell, canonical);
            HalfPowerValue w(LaurentPoly(cp.vars()));
            {
                py::gil_scoped_release release;
                w = omega(cp, r);
            }
            py::dict d;
            d["sign"] = w.sign;
            d["half_power"] = w.k;
            d["poly"] = poly_to_py(w.body);
            return d;
        },
        py::arg("genus"), py::arg("ell") = 1, py::arg("r") = 1, py::arg("canonical") = false,
        "Omega_r as sign * q^(half_power/2) * poly.");

    m.def(
        "volume",
        [](int genus, int ell, int r, int d) {
            const CurveParams cp = curve(genus, ell, false);
            LaurentPoly v(cp.vars());
            {
                py::gil_scoped_release release;
                v = moduli_volume(cp, r, d);
            }
            return poly_to_py(v);
        },
        py::arg("genus"), py::arg("ell"), py::arg("r"), py::arg("d"), "Volume polynomial for coprime (r, d).");

    m.def(
        "stabilization",
        [](int genus, int ell, int r, int depth) {
            StabilizationReport rep;
            {
                py::gil_scoped_release release;
                rep = stabilization_check(CurveParams::twisted(genus, ell), r, r, depth);
            }
            py::dict d;
            d["periodic"] = rep.periodic;
            d["d0"] = rep.d0;
            d["matches"] = rep.matches;
            d["detail"] = rep.detail;
            return d;
        },
        py::arg("genus"), py::arg("ell"), py::arg("r"), py::arg("depth") = 8);

    m.def(
        "oracle_p1",
        [](int q, int ell, int rank, int deg) {
            OracleComparison c;
            {
                py::gil_scoped_release release;
                c = compare_with_formula(rank, deg, ell, q);
            }
            py::dict d;
            d["oracle"] = rational_to_py(c.oracle);
            d["formula"] = rational_to_py(c.formula);
            d["equal"] = c.equal;
            return d;
        },
        py::arg("q"), py::arg("ell"), py::arg("rank"), py::arg("deg"),
        "Brute-force volume on the projective line against the formula.");

    m.def(
        "specialize",
        [](long q0, long trace, int ell, int rmax) {
            const ZetaData zd = ZetaData::from_trace(q0, trace);
            std::vector<long long> out;
            py::gil_scoped_release release;
            for (const auto& p : idt_star(CurveParams::twisted(1, ell), rmax)) {
                out.push_back(specialize_integer(at_t_one(p), zd));
            }
            return out;
        },
        py::arg("q0"), py::arg("trace"), py::arg("ell") = 1, py::arg("rmax") = 3,
        "IDT_r(q, 1) at an elliptic curve given by its Frobenius trace.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line in process; returns (exit code, stdout, stderr).");
}
