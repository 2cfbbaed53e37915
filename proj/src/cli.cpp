#include "higgsdt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <cmath>
#include <optional>
#include <sstream>

#include "higgsdt/format.hpp"
#include "higgsdt/oracle_p1.hpp"
#include "higgsdt/positive_series.hpp"
#include "higgsdt/verify.hpp"
#include "higgsdt/zeta.hpp"

namespace higgsdt {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kComputeSchema = "higgsdt.compute/1";
constexpr const char* kVerifySchema = "higgsdt.verify/1";
constexpr const char* kOracleSchema = "higgsdt.oracle-p1/1";
constexpr const char* kSpecializeSchema = "higgsdt.specialize/1";

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(z.get_si()));
    }
    return Json(z.get_str());
}

Json rational_json(const Rational& c)
{
    if (c.get_den() == 1) {
        return integer_json(c.get_num());
    }
    return Json(c.get_str());
}

Json poly_json(const LaurentPoly& p)
{
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        arr.push_back(Json::array({monomial_string(*p.vars(), m), rational_json(c)}));
    }
    return arr;
}

struct CurveOptions {
    int genus = 0;
    int ell = 1;
    bool canonical = false;

    void add_to(CLI::App& app)
    {
        app.add_option("--genus", genus, "curve genus g")->check(CLI::NonNegativeNumber);
        app.add_option("--ell", ell, "twist degree l (twisted mode)");
        app.add_flag("--canonical", canonical, "canonical-bundle mode, l = 2g - 2");
    }

    CurveParams params(const CLI::App& app) const
    {
        try {
            if (canonical) {
                if (app.count("--ell") > 0 && ell != 2 * genus - 2) {
                    throw std::invalid_argument("--canonical fixes l = 2g - 2");
                }
                return CurveParams::canonical(genus);
            }
            return CurveParams::twisted(genus, ell);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

Json params_json(const CurveParams& cp)
{
    Json j;
    j["genus"] = cp.genus;
    j["ell"] = cp.ell;
    j["p"] = cp.p();
    j["mode"] = cp.mode == Mode::canonical ? "canonical" : "twisted";
    return j;
}

void append(CheckList& to, CheckList more)
{
    for (auto& c : more) {
        to.push_back(std::move(c));
    }
}

// Coprime sample degree for the volume column.
int sample_degree(int r) { return r == 1 ? 0 : 1; }

struct RankRow {
    int r = 0;
    LaurentPoly idt;
    LaurentPoly idt_t1;
    HalfPowerValue omega;
    std::optional<LaurentPoly> volume;
};

std::vector<RankRow> compute_rows(const CurveParams& cp, int rmax)
{
    std::vector<RankRow> rows;
    const auto idts = idt_star(cp, rmax);
    for (int r = 1; r <= rmax; ++r) {
        const LaurentPoly& idt = idts[static_cast<std::size_t>(r - 1)];
        RankRow row{r, idt, at_t_one(idt), omega_from_idt(cp, r, idt), std::nullopt};
        if (cp.mode == Mode::twisted) {
            row.volume = moduli_volume_from_idt(cp, r, sample_degree(r), idt);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_json(const CurveParams& cp, int rmax, const std::vector<RankRow>& rows, std::ostream& out)
{
    Json doc;
    doc["schema"] = kComputeSchema;
    Json params = params_json(cp);
    params["rmax"] = rmax;
    doc["params"] = params;
    doc["results"] = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["r"] = row.r;
        j["idt"] = poly_json(row.idt);
        j["idt_t1"] = poly_json(row.idt_t1);
        j["omega"] = {{"sign", row.omega.sign},
                      {"half_power", row.omega.k},
                      {"poly", poly_json(row.omega.body)},
                      {"for_all_d", true}};
        if (cp.mode == Mode::canonical) {
            j["A"] = poly_json(row.idt_t1);
        }
        if (row.volume) {
            j["volume"] = {{"d", sample_degree(row.r)}, {"poly", poly_json(*row.volume)}};
        }
        doc["results"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

void csv_rows(std::ostream& out, int r, const std::string& quantity, const LaurentPoly& p)
{
    for (const auto& [m, c] : p.terms()) {
        out << r << ',' << quantity << ',' << monomial_string(*p.vars(), m) << ',' << c.get_str() << '\n';
    }
}

void emit_csv(const CurveParams& cp, const std::vector<RankRow>& rows, std::ostream& out)
{
    out << "r,quantity,monomial,coeff\n";
    for (const auto& row : rows) {
        csv_rows(out, row.r, "idt", row.idt);
        csv_rows(out, row.r, "idt_t1", row.idt_t1);
        csv_rows(out, row.r, "omega_body_halfpower_" + std::to_string(row.omega.k), row.omega.body * Rational(row.omega.sign));
        if (cp.mode == Mode::canonical) {
            csv_rows(out, row.r, "A", row.idt_t1);
        }
        if (row.volume) {
            csv_rows(out, row.r, "volume_d" + std::to_string(sample_degree(row.r)), *row.volume);
        }
    }
}

void emit_latex(const CurveParams& cp, const std::vector<RankRow>& rows, std::ostream& out)
{
    out << "% g = " << cp.genus << ", \\ell = " << cp.ell << ", p = " << cp.p() << "\n";
    for (const auto& row : rows) {
        out << "% partitions of " << row.r << ":";
        for (const auto& l : enumerate_partitions(row.r)) {
            out << ' ' << partition_to_latex(l);
        }
        out << "\n\\begin{align*}\n";
        out << "\\mathrm{IDT}^\\circ_{" << row.r << "}(q,t) &= " << poly_to_latex(row.idt) << " \\\\\n";
        out << "\\mathrm{IDT}^\\circ_{" << row.r << "}(q,1) &= " << poly_to_latex(row.idt_t1) << " \\\\\n";
        out << "\\Omega_{" << row.r << ",d} &= " << (row.omega.sign < 0 ? "-" : "");
        if (row.omega.k % 2 == 0 && row.omega.k != 0) {
            out << "q^{" << row.omega.k / 2 << "}";
        } else if (row.omega.k != 0) {
            out << "q^{" << row.omega.k << "/2}";
        }
        out << "\\left(" << poly_to_latex(row.omega.body) << "\\right)";
        if (row.volume) {
            out << " \\\\\n\\mathrm{vol}(" << row.r << ',' << sample_degree(row.r) << ") &= " << poly_to_latex(*row.volume);
        } else if (cp.mode == Mode::canonical) {
            out << " \\\\\nA_{" << row.r << ",d} &= " << poly_to_latex(row.idt_t1);
        }
        out << "\n\\end{align*}\n";
    }
}

Json checks_json(const std::string& suite, const CheckList& checks)
{
    Json doc;
    doc["schema"] = kVerifySchema;
    doc["suite"] = suite;
    doc["pass"] = all_pass(checks);
    doc["checks"] = Json::array();
    for (const auto& c : checks) {
        doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return doc;
}

std::vector<Complex> parse_weil(const std::string& text)
{
    std::vector<long double> nums;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long double v = 0;
        try {
            v = std::stold(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--weil: not a number: '" + item + "'");
        }
        if (used != item.size()) {
            throw UsageError("--weil: not a number: '" + item + "'");
        }
        nums.push_back(v);
    }
    if (nums.empty() || nums.size() % 2 != 0) {
        throw UsageError("--weil expects comma-separated re,im pairs");
    }
    std::vector<Complex> out;
    for (std::size_t i = 0; i < nums.size(); i += 2) {
        out.emplace_back(nums[i], nums[i + 1]);
    }
    return out;
}

const std::vector<std::string> kSuites = {"combinatorics", "exp-log", "f-function", "integrality", "rank1", "alt",
                                          "stabilization", "oracle", "specialize", "canonical", "all"};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact DT invariants of twisted Higgs bundles", "higgsdt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "higgsdt 1.0");

    std::string format = "json";
    int rmax = 3;
    int depth = 8;

    auto* compute = app.add_subcommand("compute", "IDT, Omega and volumes for r <= rmax");
    CurveOptions compute_curve;
    compute_curve.add_to(*compute);
    compute->add_option("--rmax", rmax, "largest rank")->check(CLI::NonNegativeNumber);
    compute->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(kSuites));
    CurveOptions verify_curve;
    verify_curve.add_to(*verify);
    verify->add_option("--rmax", rmax, "largest rank")->check(CLI::NonNegativeNumber);
    verify->add_option("--depth", depth, "t-expansion depth D")->check(CLI::NonNegativeNumber);
    int verify_q = 2;
    verify->add_option("--q", verify_q, "field size for the oracle suite");
    long verify_q0 = 5;
    verify->add_option("--q0", verify_q0, "field size for the specialize suite");
    std::vector<long> verify_traces;
    verify->add_option("--trace", verify_traces, "Frobenius traces for the specialize suite");

    auto* oracle = app.add_subcommand("oracle-p1", "brute-force volume on the projective line");
    int oq = 2;
    int oell = 1;
    int orank = 1;
    int odeg = 0;
    oracle->add_option("--q", oq, "field size")->required();
    oracle->add_option("--ell", oell, "twist degree l >= 1");
    oracle->add_option("--rank", orank, "rank r (1 or 2)");
    oracle->add_option("--deg", odeg, "degree d, coprime to r");

    auto* specialize = app.add_subcommand("specialize", "evaluate IDT_r(q, 1) at numeric Weil numbers");
    CurveOptions spec_curve;
    spec_curve.add_to(*specialize);
    long q0 = 0;
    std::optional<long> trace;
    std::string weil;
    specialize->add_option("--q0", q0, "field size")->required();
    auto* trace_opt = specialize->add_option("--trace", trace, "Frobenius trace (genus one)");
    specialize->add_option("--weil", weil, "Weil numbers as re,im,re,im,...")->excludes(trace_opt);
    specialize->add_option("--rmax", rmax, "largest rank")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kExitOk;
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*compute) {
            const CurveParams cp = compute_curve.params(*compute);
            const auto rows = compute_rows(cp, rmax);
            if (format == "csv") {
                emit_csv(cp, rows, out);
            } else if (format == "latex") {
                emit_latex(cp, rows, out);
            } else {
                emit_json(cp, rmax, rows, out);
            }
            return kExitOk;
        }
        if (*verify) {
            CheckList checks;
            const bool run_all = suite == "all";
            auto want = [&](const char* name) { return run_all || suite == name; };
            if (want("combinatorics")) {
                append(checks, check_combinatorics());
            }
            if (want("exp-log")) {
                append(checks, check_plethysm());
            }
            if (want("f-function")) {
                append(checks, check_f_properties(2, 3, 2, std::max(1, verify_curve.genus)));
            }
            if (want("rank1")) {
                append(checks, check_rank_one(3));
            }
            if (want("canonical")) {
                append(checks, check_canonical(std::max(1, verify_curve.genus)));
            }
            if (want("specialize")) {
                if (verify_traces.empty()) {
                    verify_traces = {-2, 0, 1, 4};
                }
                append(checks, check_specialize(verify_q0, verify_traces, std::max(1, verify_curve.ell)));
            }
            if (want("oracle")) {
                if (verify_curve.ell < 1) {
                    throw UsageError("the oracle suite needs l >= 1");
                }
                append(checks, check_oracle(1, 0, verify_curve.ell, verify_q));
                append(checks, check_oracle(2, 1, verify_curve.ell, verify_q));
            }
            const bool needs_curve = want("integrality") || want("alt") || want("stabilization");
            if (needs_curve) {
                const CurveParams cp = verify_curve.params(*verify);
                if (want("integrality")) {
                    append(checks, check_integrality(cp, rmax));
                }
                if (cp.mode == Mode::twisted && want("alt")) {
                    append(checks, check_alternative(cp, rmax, rmax));
                }
                if (cp.mode == Mode::twisted && want("stabilization")) {
                    append(checks, check_stabilization(cp, std::min(rmax, 2), depth));
                }
            }
            const Json doc = checks_json(suite, checks);
            out << doc.dump(2) << '\n';
            return all_pass(checks) ? kExitOk : kExitVerificationFailure;
        }
        if (*oracle) {
            const OracleComparison cmp = compare_with_formula(orank, odeg, oell, oq);
            Json doc;
            doc["schema"] = kOracleSchema;
            doc["params"] = {{"q", oq}, {"ell", oell}, {"rank", orank}, {"deg", odeg}};
            doc["oracle"] = rational_json(cmp.oracle);
            doc["formula"] = rational_json(cmp.formula);
            doc["equal"] = cmp.equal;
            doc["spread_bound"] = cmp.detail.spread_bound;
            doc["boundary_vanishes"] = cmp.detail.boundary_vanishes;
            doc["contributions"] = Json::array();
            for (const auto& [type, value] : cmp.detail.contributions) {
                doc["contributions"].push_back({{"type", type.degrees}, {"value", rational_json(value)}});
            }
            out << doc.dump(2) << '\n';
            return cmp.equal ? kExitOk : kExitVerificationFailure;
        }
        if (*specialize) {
            ZetaData zd;
            try {
                if (trace) {
                    zd = ZetaData::from_trace(q0, *trace);
                } else if (!weil.empty()) {
                    zd = ZetaData::numeric(q0, parse_weil(weil));
                } else {
                    zd = ZetaData::numeric(q0, {});
                }
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (specialize->count("--genus") > 0 && spec_curve.genus != zd.genus) {
                throw UsageError("--genus disagrees with the number of Weil numbers");
            }
            spec_curve.genus = zd.genus;
            const CurveParams cp = spec_curve.params(*specialize);
            Json doc;
            doc["schema"] = kSpecializeSchema;
            Json params = params_json(cp);
            params["q0"] = q0;
            params["rmax"] = rmax;
            params["weil"] = Json::array();
            for (const auto& a : zd.weil) {
                params["weil"].push_back({static_cast<double>(a.real()), static_cast<double>(a.imag())});
            }
            doc["params"] = params;
            const CountingSequence counts = point_counts(zd, std::max(rmax, 1));
            doc["point_counts"] = Json::array();
            for (std::size_t n = 1; n <= counts.size(); ++n) {
                doc["point_counts"].push_back(std::llround(static_cast<double>(counts[n].real())));
            }
            doc["results"] = Json::array();
            const auto idts = idt_star(cp, rmax);
            for (int r = 1; r <= rmax; ++r) {
                const LaurentPoly t1 = at_t_one(idts[static_cast<std::size_t>(r - 1)]);
                const HalfPowerValue w = omega_from_idt(cp, r, idts[static_cast<std::size_t>(r - 1)]);
                doc["results"].push_back({{"r", r},
                                          {"idt_t1", specialize_integer(t1, zd)},
                                          {"omega", {{"sign", w.sign},
                                                     {"half_power", w.k},
                                                     {"value", specialize_integer(w.body, zd)}}}});
            }
            out << doc.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IntegralityError& e) {
        err << "integrality violation: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "enumeration too large: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}

} // namespace higgsdt
