#include "higgsdt/format.hpp"

#include <sstream>

namespace higgsdt {

std::string monomial_string(const VariableTable& vars, const Monomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += ' ';
        }
        s += vars.name(i) + "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial parse_monomial(const VariableTable& vars, const std::string& text)
{
    Monomial m;
    if (text == "1") {
        return m;
    }
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        if (caret == std::string::npos) {
            throw std::invalid_argument("monomial factor without exponent: '" + token + "'");
        }
        const auto var = vars.find(token.substr(0, caret));
        if (!var) {
            throw std::invalid_argument("unknown variable in '" + token + "'");
        }
        std::size_t used = 0;
        const std::string exponent = token.substr(caret + 1);
        const int e = std::stoi(exponent, &used);
        if (used != exponent.size()) {
            throw std::invalid_argument("bad exponent in '" + token + "'");
        }
        m.set(*var, m[*var] + e);
    }
    return m;
}

namespace {

std::string human_monomial(const VariableTable& vars, const Monomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += ' ';
        }
        s += vars.name(i);
        if (m[i] != 1) {
            s += "^" + std::to_string(m[i]);
        }
    }
    return s;
}

std::string latex_variable(const std::string& name)
{
    if (name.size() > 1 && name[0] == 'a') {
        return "\\alpha_{" + name.substr(1) + "}";
    }
    if (name.size() > 1 && name[0] == 'z') {
        return "z_{" + name.substr(1) + "}";
    }
    return name;
}

template <class MonomialWriter, class CoefficientWriter>
std::string render(const LaurentPoly& p, MonomialWriter write, CoefficientWriter coefficient, const char* times)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    // Highest monomial first reads more naturally.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (s.empty()) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        const std::string mono = write(m);
        if (mono.empty()) {
            s += coefficient(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += coefficient(mag) + times + mono;
        }
    }
    return s;
}

} // namespace

std::string poly_to_string(const LaurentPoly& p)
{
    return render(
        p, [&](const Monomial& m) { return human_monomial(*p.vars(), m); },
        [](const Rational& c) { return c.get_str(); }, " ");
}

std::string poly_to_latex(const LaurentPoly& p)
{
    const VariableTable& vars = *p.vars();
    auto write = [&](const Monomial& m) {
        std::string s;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            s += latex_variable(vars.name(i));
            if (m[i] != 1) {
                s += "^{" + std::to_string(m[i]) + "}";
            }
        }
        return s;
    };
    auto coefficient = [](const Rational& c) {
        if (c.get_den() == 1) {
            return c.get_num().get_str();
        }
        return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    };
    return render(p, write, coefficient, "");
}

std::string partition_to_latex(const Partition& lambda)
{
    if (lambda.empty()) {
        return "\\varnothing";
    }
    std::string s = "(";
    for (int i = 1; i <= lambda.length(); ++i) {
        if (i > 1) {
            s += ",";
        }
        s += std::to_string(lambda.part(i));
    }
    return s + ")";
}

} // namespace higgsdt
