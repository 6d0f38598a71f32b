#include "psf/latex.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace psf::latex {

namespace {

// Magnitude of a coefficient in front of a symbol; empty for 1.
std::string magnitude(const Rational& abs_value, bool has_symbol) {
  if (has_symbol && abs_value == Rational(1)) return "";
  if (abs_value.is_integer()) return to_string(abs_value.num());
  return "\\frac{" + to_string(abs_value.num()) + "}{" + to_string(abs_value.den()) + "}";
}

struct Term {
  Rational coefficient;
  std::string symbol;
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.coefficient.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude(t.coefficient.abs(), !t.symbol.empty()) + t.symbol;
  }
  return out;
}

// "7" or "{12}" after ^ or _.
std::string script(long value) {
  const std::string digits = std::to_string(value);
  return digits.size() == 1 ? digits : "{" + digits + "}";
}

std::string power(std::string_view variable, unsigned degree) {
  if (degree == 0) return "";
  if (degree == 1) return std::string(variable);
  return std::string(variable) + "^" + script(degree);
}

template <typename Range>
std::string cubic_display(const Range& parts, std::string_view open, std::string_view close,
                          std::string_view exponent) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size()) {
      out += " = ";
    } else if (i != 0) {
      out += " + ";
    }
    out += std::string(open) + parts[i] + std::string(close) + "^" + std::string(exponent);
  }
  return out;
}

}  // namespace

std::string rational(const Rational& r) {
  if (r.sign() < 0) return "-" + magnitude(r.abs(), false);
  return magnitude(r, false);
}

std::string combo(const PowerSumCombo& c) {
  std::vector<Term> terms;
  for (const auto& [e, coeff] : c.terms()) {
    terms.push_back({coeff, e == PowerSumCombo::kConstantSlot ? "" : "S_" + script(e)});
  }
  return join_terms(terms);
}

std::string polynomial(const Polynomial& p, std::string_view variable, Order order) {
  std::vector<Term> terms;
  for (const auto& [d, coeff] : p.terms()) terms.push_back({coeff, power(variable, d)});
  if (order == Order::Descending) std::reverse(terms.begin(), terms.end());
  // Keep a space between a fraction and its variable, as in "\frac{1}{3} n^3".
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const bool negative = t.coefficient.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mag = magnitude(t.coefficient.abs(), !t.symbol.empty());
    out += mag;
    if (!mag.empty() && !t.symbol.empty() && !t.coefficient.is_integer()) out += " ";
    out += t.symbol;
  }
  return terms.empty() ? "0" : out;
}

std::string form(const BinaryQuadraticForm& f) {
  std::vector<Term> terms;
  if (f.alpha != 0) terms.push_back({Rational(f.alpha), "u^2"});
  if (f.beta != 0) terms.push_back({Rational(f.beta), "uv"});
  if (f.gamma != 0) terms.push_back({Rational(f.gamma), "v^2"});
  return join_terms(terms);
}

std::string form_quadruple(const FormQuadruple& fq) {
  std::vector<std::string> parts;
  for (const auto& f : fq.q) parts.push_back(form(f));
  return cubic_display(parts, "(", ")", "3");
}

std::string square_forms(const SquareFormQuadruple& fq) {
  std::vector<std::string> parts;
  for (const auto& f : fq.q) parts.push_back(form(f));
  return cubic_display(parts, "(", ")", "2");
}

std::string square_forms(const SquareFormTriple& ft) {
  std::vector<std::string> parts;
  for (const auto& f : ft) parts.push_back(form(f));
  return cubic_display(parts, "(", ")", "2");
}

std::string relation(const ComboQuadruple& cq) {
  std::vector<std::string> parts;
  for (const auto& c : cq.c) parts.push_back(combo(c));
  return cubic_display(parts, "\\big( ", " \\big)", "3");
}

std::string relation(const PolyIdentity& pi) {
  std::vector<std::string> parts;
  for (const auto& p : pi.p) parts.push_back(polynomial(p, "u", Order::Ascending));
  return cubic_display(parts, "\\big( ", " \\big)", "3");
}

std::string square_relation(std::span<const PowerSumCombo> combos) {
  std::vector<std::string> parts;
  for (const auto& c : combos) parts.push_back(combo(c));
  return cubic_display(parts, "\\big( ", " \\big)", "2");
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

}  // namespace psf::latex
