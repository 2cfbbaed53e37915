#include <doctest.h>

#include <random>

#include "higgsdt/format.hpp"
#include "higgsdt/fraction.hpp"
#include "higgsdt/series.hpp"

using namespace higgsdt;

namespace {

LaurentPoly random_poly(const VarTable& vars, std::mt19937& rng, int terms, int spread)
{
    std::uniform_int_distribution<int> e(-spread, spread);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<LaurentPoly::Term> out;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (std::size_t v = 0; v < vars->size(); ++v) {
            m.set(v, e(rng));
        }
        out.emplace_back(m, Rational(c(rng)));
    }
    return LaurentPoly(vars, std::move(out));
}

std::vector<Rational> point(std::size_t n, int shift)
{
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) {
        p.emplace_back(static_cast<long>(2 * i + 3 + shift), static_cast<long>(i + 2));
    }
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic agrees with evaluation")
{
    const auto vars = standard_table(1);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(vars, rng, 6, 3);
        const auto b = random_poly(vars, rng, 5, 3);
        const auto x = point(vars->size(), trial % 3);
        CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
        CHECK((a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x));
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        std::vector<Rational> sq;
        for (const auto& v : x) {
            sq.push_back(v * v);
        }
        CHECK(a.adams(2).evaluate(x) == a.evaluate(sq));
    }
}

TEST_CASE("ring axioms on random Laurent polynomials")
{
    const auto vars = standard_table(2);
    std::mt19937 rng(1234);
    const auto zero = LaurentPoly(vars);
    const auto one = LaurentPoly::constant(vars, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_poly(vars, rng, 4, 2);
        const auto b = random_poly(vars, rng, 3, 2);
        const auto c = random_poly(vars, rng, 3, 2);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a - a == zero);
        CHECK((a * b).adams(3) == a.adams(3) * b.adams(3));
    }
}

TEST_CASE("exact division undoes multiplication by a binomial")
{
    const auto vars = standard_table(1);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(vars, rng, 5, 3);
        Monomial m1;
        Monomial m2;
        for (std::size_t v = 0; v < vars->size(); ++v) {
            m1.set(v, e(rng));
            m2.set(v, e(rng));
        }
        if (m1 == m2) {
            continue;
        }
        const BinomialFactor f(m1, m2);
        const auto prod = p * f.expand(vars);
        CHECK(exact_divide(prod, f) == p);
        if (!p.is_zero()) {
            CHECK_THROWS_AS(exact_divide(prod + LaurentPoly::monomial(vars, m1), f), NotDivisible);
        }
    }
}

TEST_CASE("exact division by binomials and cyclotomic atoms")
{
    const auto vars = standard_table(0);
    const auto q = Monomial::variable(kVarQ);
    const auto one = Monomial();
    const auto num = LaurentPoly::monomial(vars, one) - LaurentPoly::monomial(vars, q.pow(6));
    const auto quo = exact_divide(num, BinomialFactor(one, q.pow(2)));
    // divides by leading - trailing = q^2 - 1
    CHECK(poly_to_string(quo) == "-q^4 - q^2 - 1");
    CHECK_THROWS_AS(exact_divide(num, BinomialFactor(one, q.pow(4))), NotDivisible);

    Fraction f(num);
    f.divide_binomial(one, q.pow(2));
    f.reduce();
    CHECK(f.is_polynomial());
    CHECK(f.to_laurent() == -quo);

    Fraction g(LaurentPoly::constant(vars, 1));
    g.divide_binomial(one, q.pow(4));
    CHECK_THROWS_AS(g.to_laurent(), NotDivisible);
    CHECK(cyclotomic_coefficients(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_coefficients(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("fraction sums use the lcm of denominators")
{
    const auto vars = standard_table(0);
    const auto q = Monomial::variable(kVarQ);
    const auto one = Monomial();
    // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
    Fraction a = Fraction::inverse_of(vars, one, q);
    Fraction b = Fraction::inverse_of(vars, one, q.pow(2));
    b *= LaurentPoly::constant(vars, 1) - LaurentPoly::monomial(vars, q);
    Fraction sum = a + b;
    Fraction expect = Fraction::inverse_of(vars, one, q.pow(2)) * Rational(2);
    CHECK(sum == expect);
    for (long v : {2L, 3L, 5L}) {
        std::vector<Rational> x{Rational(v), Rational(7)};
        CHECK(sum.evaluate(x) == Rational(2) / (1 - Rational(v * v)));
    }
    // adams commutes with evaluation at squares
    std::vector<Rational> x{Rational(3), Rational(5)};
    std::vector<Rational> x2{Rational(9), Rational(25)};
    CHECK(sum.adams(2).evaluate(x) == sum.evaluate(x2));
}

TEST_CASE("expansion at t = 0")
{
    const auto vars = standard_table(0);
    const auto q = Monomial::variable(kVarQ);
    const auto t = Monomial::variable(kVarT);
    const auto one = Monomial();
    // 1/(1 - q t) = sum q^k t^k
    const auto series = Fraction::inverse_of(vars, one, q * t).expand_in(kVarT, 5);
    REQUIRE(series.size() == 6);
    for (int k = 0; k <= 5; ++k) {
        CHECK(series[static_cast<std::size_t>(k)] == Fraction(LaurentPoly::monomial(vars, q.pow(k))));
    }
    // 1/(t - q): written with the t side first, expansion -1/q - t/q^2 - ...
    const auto flipped = Fraction::inverse_of(vars, t, q).expand_in(kVarT, 3);
    for (int k = 0; k <= 3; ++k) {
        CHECK(flipped[static_cast<std::size_t>(k)] ==
              Fraction(LaurentPoly::monomial(vars, q.pow(-k - 1), -1)));
    }
    // 1/(1 + t^2) has coefficients 1, 0, -1, 0, 1
    Fraction c = Fraction::inverse_of(vars, one, t.pow(4));
    c *= LaurentPoly::constant(vars, 1) - LaurentPoly::monomial(vars, t.pow(2));
    const auto cs = c.expand_in(kVarT, 4);
    const std::vector<int> want{1, 0, -1, 0, 1};
    for (int k = 0; k <= 4; ++k) {
        CHECK(cs[static_cast<std::size_t>(k)] ==
              Fraction(LaurentPoly::constant(vars, want[static_cast<std::size_t>(k)])));
    }
    CHECK_THROWS_AS(Fraction::inverse_of(vars, t, t.pow(2)).expand_in(kVarT, 2), std::domain_error);
}

TEST_CASE("monomial serialization round trip")
{
    const auto vars = standard_table(2);
    Monomial m;
    m.set(kVarQ, 2);
    m.set(kVarT, 1);
    m.set(alpha_var(0), -1);
    CHECK(monomial_string(*vars, m) == "q^2 t^1 a1^-1");
    CHECK(parse_monomial(*vars, "q^2 t^1 a1^-1") == m);
    CHECK(monomial_string(*vars, Monomial()) == "1");
    CHECK_THROWS_AS(parse_monomial(*vars, "x^2"), std::invalid_argument);
}

TEST_CASE("plethystic Exp and Log")
{
    const auto vars = standard_table(0);
    const int order = 6;
    // Log(1 + T) = T - T^2
    TruncSeries b = TruncSeries::one(vars, order);
    b.coeff(1) = Fraction::constant(vars, 1);
    const auto l = pleth_log(b);
    CHECK(l[1] == Fraction::constant(vars, 1));
    CHECK(l[2] == Fraction::constant(vars, -1));
    for (int k = 3; k <= order; ++k) {
        CHECK(l[k].is_zero());
    }
    CHECK(pleth_exp(l) == b);

    // Exp(q T) = 1/(1 - q T)
    TruncSeries a(vars, order);
    a.coeff(1) = Fraction(LaurentPoly::variable(vars, "q"));
    const auto e = pleth_exp(a);
    for (int k = 0; k <= order; ++k) {
        CHECK(e[k] == Fraction(LaurentPoly::monomial(vars, Monomial::variable(kVarQ, k))));
    }
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
}
