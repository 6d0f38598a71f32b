#pragma once

// LaTeX renderings in the display style used for published identities, e.g.
//   (3u^2 + 15uv - 8v^2)^3 + ... = (27u^2 - 21uv + 6v^2)^3
//   \big( 15S_2 + 2S_3 + 75S_4 - 32S_5 \big)^3 + ...
//   \frac{1}{3}S_3 + \frac{2}{3}S_5

#include <string>
#include <string_view>

#include "psf/cubic_forms.hpp"
#include "psf/identities.hpp"
#include "psf/polynomial.hpp"
#include "psf/powersum.hpp"
#include "psf/quadratic.hpp"

namespace psf::latex {

enum class Order { Ascending, Descending };

std::string rational(const Rational& r);
std::string combo(const PowerSumCombo& c);
std::string polynomial(const Polynomial& p, std::string_view variable = "n",
                       Order order = Order::Descending);
std::string form(const BinaryQuadraticForm& f);

std::string form_quadruple(const FormQuadruple& fq);
std::string square_forms(const SquareFormQuadruple& fq);
std::string square_forms(const SquareFormTriple& ft);

/// (c1)^3 + (c2)^3 + (c3)^3 = (c4)^3 with \big( \big) delimiters.
std::string relation(const ComboQuadruple& cq);
/// Same for a polynomial identity in u, ascending powers.
std::string relation(const PolyIdentity& pi);

/// sum of squares of all but the last combo = square of the last.
std::string square_relation(std::span<const PowerSumCombo> combos);

/// Drops all whitespace; golden comparisons are made modulo whitespace.
std::string strip_whitespace(std::string_view text);

}  // namespace psf::latex
