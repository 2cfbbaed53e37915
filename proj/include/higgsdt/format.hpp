#pragma once

#include <string>

#include "higgsdt/laurent.hpp"
#include "higgsdt/partitions.hpp"

namespace higgsdt {

/// Serialized monomial, e.g. "q^2 t^1 a1^-1"; the unit monomial is "1".
std::string monomial_string(const VariableTable& vars, const Monomial& m);

/// Inverse of monomial_string; throws std::invalid_argument on bad input.
Monomial parse_monomial(const VariableTable& vars, const std::string& text);

/// Human-readable form, e.g. "q^2 - 2 q t + 1".
std::string poly_to_string(const LaurentPoly& p);

/// LaTeX form with Weil variables written as \alpha_i.
std::string poly_to_latex(const LaurentPoly& p);

std::string partition_to_latex(const Partition& lambda);

} // namespace higgsdt
