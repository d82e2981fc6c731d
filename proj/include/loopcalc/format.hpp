#pragma once

// Canonical text form of monomials, elements and tensors. The output is
// valid input for the expression parser.

#include <string>

#include "loopcalc/algebra.hpp"
#include "loopcalc/tensor.hpp"

namespace loopcalc {

inline std::string format_monomial(const GradedAlgebra& alg, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += alg.generator_spec(i).name;
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

// Appends "c*body" with the sign folded into the separator; the unit
// monomial prints as the bare coefficient.
inline void append_term(std::string& out, const Integer& c,
                        const std::string& body, bool is_unit) {
  const bool negative = c < 0;
  const Integer magnitude = negative ? Integer(-c) : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (is_unit)
    out += magnitude.str();
  else if (magnitude == 1)
    out += body;
  else
    out += magnitude.str() + "*" + body;
}

}  // namespace detail

inline std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms())
    detail::append_term(out, c, format_monomial(x.algebra(), m), m.is_unit());
  return out;
}

inline std::string format_tensor(const TensorElement& t) {
  if (t.arity() == 1) return format_element(to_element(t));
  if (t.is_zero()) {
    std::string out = "(0";
    for (std::size_t i = 1; i < t.arity(); ++i) out += " (x) 0";
    return out + ")";
  }
  std::string out;
  for (const auto& [tuple, c] : t.terms()) {
    std::string body = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i > 0) body += " (x) ";
      body += format_monomial(t.algebra(), tuple[i]);
    }
    body += ")";
    detail::append_term(out, c, body, false);
  }
  return out;
}

}  // namespace loopcalc
