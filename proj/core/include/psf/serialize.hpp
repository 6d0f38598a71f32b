#pragma once

// JSON encodings. Big integers are always written as decimal strings; readers
// also accept plain JSON numbers.
//
//   Rational        {"num": "p", "den": "q"}
//   PowerSumCombo   {"terms": [{"exp": j, "num": "p", "den": "q"}, ...]}   exp -1 is the constant
//   Polynomial      {"terms": [{"exp": d, "num": "p", "den": "q"}, ...]}
//   FormQuadruple   {"kind": "cubic", "q": [{"alpha","beta","gamma"} x4], "seed": [a,b,c,d]}
//   SolutionRecord  {"seed", "mode", "uv", "raw", "reduced", "content", "ratio", "taxicab", ["n"]}

#include <nlohmann/json.hpp>

#include "psf/cubic_forms.hpp"
#include "psf/identities.hpp"
#include "psf/polynomial.hpp"
#include "psf/powersum.hpp"
#include "psf/quadratic.hpp"
#include "psf/search.hpp"

namespace psf {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const PowerSumCombo& combo);
PowerSumCombo combo_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const BinaryQuadraticForm& form);
BinaryQuadraticForm form_from_json(const Json& j);

Json to_json(const CubicQuadruple& seed);
CubicQuadruple seed_from_json(const Json& j);

Json to_json(const FormQuadruple& fq);
FormQuadruple form_quadruple_from_json(const Json& j);

Json to_json(const SquareFormQuadruple& fq);
Json to_json(const SquareFormTriple& ft);
SquareFormQuadruple square_quadruple_from_json(const Json& j);

/// Combos, common factor and a provenance block (seed, forms, mode).
Json to_json(const ComboQuadruple& cq);
ComboQuadruple combo_quadruple_from_json(const Json& j);
Json to_json(const PolyIdentity& pi);
PolyIdentity poly_identity_from_json(const Json& j);
Json to_json(const RootFactorization& rf);

Json to_json(const SolutionRecord& record);
SolutionRecord record_from_json(const Json& j);

/// {"u_range": [lo, hi], "v_range": [lo, hi], "seeds": [[a,b,c,d], ...],
///  "modes": ["cubic", "Q:1,2", "F:2"], "dedupe": true, "output": "path",
///  "allow_large": false, "threads": n}
SearchConfig config_from_json(const Json& j);
Json to_json(const SearchConfig& cfg);

}  // namespace psf
