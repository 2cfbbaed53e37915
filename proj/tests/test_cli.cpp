#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "higgsdt/cli.hpp"
#include "higgsdt/dt_formulas.hpp"
#include "higgsdt/format.hpp"

using namespace higgsdt;
using Json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

LaurentPoly poly_from_json(const VarTable& vars, const Json& arr)
{
    std::vector<LaurentPoly::Term> terms;
    for (const auto& item : arr) {
        const Json& c = item.at(1);
        const Rational coeff = c.is_string() ? Rational(c.get<std::string>()) : Rational(c.get<long>());
        terms.emplace_back(parse_monomial(*vars, item.at(0).get<std::string>()), coeff);
    }
    return LaurentPoly(vars, std::move(terms));
}

} // namespace

TEST_CASE("compute at genus zero")
{
    const auto r = run({"compute", "--genus", "0", "--ell", "1", "--rmax", "1"});
    REQUIRE(r.code == kExitOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc.at("schema") == "higgsdt.compute/1");
    CHECK(doc.at("params").at("p") == 3);
    const Json& row = doc.at("results").at(0);
    CHECK(row.at("r") == 1);
    CHECK(row.at("idt") == Json::parse(R"([["1",-1]])"));
    CHECK(row.at("omega").at("sign") == -1);
    CHECK(row.at("omega").at("half_power") == 3);
    CHECK(row.at("omega").at("poly") == Json::parse(R"([["1",1]])"));
    CHECK(row.at("volume").at("d") == 0);
    CHECK(row.at("volume").at("poly") == Json::parse(R"([["q^2",1]])"));
}

TEST_CASE("compute in canonical mode")
{
    const auto r = run({"compute", "--genus", "1", "--canonical", "--rmax", "1"});
    REQUIRE(r.code == kExitOk);
    const Json row = Json::parse(r.out).at("results").at(0);
    const auto vars = standard_table(1);
    const auto q = LaurentPoly::variable(vars, "q");
    const auto a = LaurentPoly::variable(vars, "a1");
    const auto one = LaurentPoly::constant(vars, 1);
    const auto ainv = LaurentPoly::monomial(vars, Monomial::variable(alpha_var(0), -1));
    CHECK(poly_from_json(vars, row.at("A")) == (one - ainv) * (q - a));
    CHECK_FALSE(row.contains("volume"));
}

TEST_CASE("compute round trips the exact invariants")
{
    const auto cp = CurveParams::twisted(1, 2);
    const auto r = run({"compute", "--genus", "1", "--ell", "2", "--rmax", "3"});
    REQUIRE(r.code == kExitOk);
    const Json doc = Json::parse(r.out);
    const auto idt = idt_star(cp, 3);
    REQUIRE(doc.at("results").size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(poly_from_json(cp.vars(), doc.at("results").at(i).at("idt")) == idt[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("empty table and other formats")
{
    const auto empty = run({"compute", "--rmax", "0"});
    CHECK(empty.code == kExitOk);
    CHECK(Json::parse(empty.out).at("results").empty());

    const auto csv = run({"compute", "--genus", "0", "--ell", "1", "--rmax", "1", "--format", "csv"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out.rfind("r,quantity,monomial,coeff\n1,idt,1,-1\n", 0) == 0);

    const auto tex = run({"compute", "--genus", "0", "--ell", "1", "--rmax", "2", "--format", "latex"});
    CHECK(tex.code == kExitOk);
    CHECK(tex.out.find("\\Omega_{1,d} &= -q^{3/2}") != std::string::npos);
    CHECK(tex.out.find("% partitions of 2: (2) (1,1)") != std::string::npos);
}

TEST_CASE("output is byte stable across thread counts")
{
    const std::vector<std::string> args{"compute", "--genus", "1", "--ell", "1", "--rmax", "4"};
    ::setenv("HIGGSDT_THREADS", "1", 1);
    const auto serial = run(args);
    ::setenv("HIGGSDT_THREADS", "4", 1);
    const auto parallel = run(args);
    ::unsetenv("HIGGSDT_THREADS");
    CHECK(serial.code == kExitOk);
    CHECK(serial.out == parallel.out);
    CHECK(run(args).out == serial.out);
}

TEST_CASE("verify suites")
{
    const auto el = run({"verify", "exp-log"});
    CHECK(el.code == kExitOk);
    CHECK(Json::parse(el.out).at("pass") == true);

    const auto integ = run({"verify", "integrality", "--genus", "1", "--ell", "1", "--rmax", "3"});
    CHECK(integ.code == kExitOk);

    const auto oracle = run({"verify", "oracle", "--q", "2", "--ell", "1"});
    CHECK(oracle.code == kExitOk);
    CHECK(Json::parse(oracle.out).at("checks").size() == 2);

    // a window of period 2 cannot fit at depth 1
    const auto shallow = run({"verify", "stabilization", "--genus", "1", "--ell", "2", "--rmax", "2", "--depth", "1"});
    CHECK(shallow.code == kExitVerificationFailure);
    CHECK(Json::parse(shallow.out).at("pass") == false);
}

TEST_CASE("oracle and specialize subcommands")
{
    const auto o = run({"oracle-p1", "--q", "2", "--ell", "1", "--rank", "2", "--deg", "1"});
    CHECK(o.code == kExitOk);
    const Json doc = Json::parse(o.out);
    CHECK(doc.at("oracle") == 32);
    CHECK(doc.at("equal") == true);

    const auto half = run({"oracle-p1", "--q", "3", "--ell", "1", "--rank", "1", "--deg", "0"});
    CHECK(half.code == kExitOk);
    // q^{l+1} fields over q - 1 automorphisms
    CHECK(Json::parse(half.out).at("oracle") == "9/2");

    const auto s = run({"specialize", "--q0", "5", "--trace", "2", "--rmax", "2"});
    CHECK(s.code == kExitOk);
    const Json sd = Json::parse(s.out);
    CHECK(sd.at("point_counts").at(0) == 4);
    CHECK(sd.at("results").at(0).at("idt_t1") == -4);

    const auto w = run({"specialize", "--q0", "4", "--weil", "0,2,0,-2", "--rmax", "1"});
    CHECK(w.code == kExitOk);
    CHECK(Json::parse(w.out).at("results").at(0).at("idt_t1") == -5);
}

TEST_CASE("usage errors exit with 2")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"compute", "--format", "xml"},
             {"compute", "--genus", "0", "--ell", "-3"},
             {"compute", "--canonical", "--genus", "0"},
             {"compute", "--canonical", "--genus", "2", "--ell", "1"},
             {"compute", "--rmax", "-1"},
             {"verify", "bogus"},
             {"verify"},
             {"oracle-p1", "--q", "6"},
             {"oracle-p1", "--q", "2", "--rank", "2", "--deg", "2"},
             {"oracle-p1", "--q", "2", "--rank", "3", "--deg", "1"},
             {"specialize", "--q0", "2", "--trace", "5"},
             {"specialize", "--q0", "4", "--weil", "1,1"},
             {"specialize", "--q0", "4", "--weil", "x,y"},
             {"specialize", "--q0", "5", "--trace", "1", "--weil", "1,2,1,-2"},
         }) {
        const auto r = run(args);
        CHECK_MESSAGE(r.code == kExitUsage, "args: ", Json(args).dump());
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    CHECK(run({"--help"}).code == kExitOk);
}
