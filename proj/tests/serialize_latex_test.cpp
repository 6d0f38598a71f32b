#include <gtest/gtest.h>

#include "psf/latex.hpp"
#include "psf/serialize.hpp"
#include "support.hpp"

namespace psf {
namespace {

using latex::strip_whitespace;
using test::combo;

void expect_same_tex(const std::string& actual, const std::string& expected) {
  EXPECT_EQ(strip_whitespace(actual), strip_whitespace(expected)) << actual;
}

TEST(Json, RationalAndIntegers) {
  EXPECT_EQ(to_json(Rational::parse("-691/2730")).dump(), R"({"num":"-691","den":"2730"})");
  EXPECT_EQ(rational_from_json(Json::parse(R"({"num":"4","den":"-6"})")), Rational::parse("-2/3"));
  EXPECT_EQ(integer_from_json(Json(12)), 12);
  EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890")),
            parse_integer("123456789012345678901234567890"));
  EXPECT_THROW(integer_from_json(Json(1.5)), std::invalid_argument);
  EXPECT_THROW(rational_from_json(Json::parse(R"({"num":"1"})")), std::invalid_argument);
  EXPECT_THROW(rational_from_json(Json::parse(R"({"num":"1","den":"0"})")), std::domain_error);
}

TEST(Json, ComboAndPolynomial) {
  const PowerSumCombo c = square(2);
  EXPECT_EQ(to_json(c).dump(),
            R"({"terms":[{"exp":3,"num":"1","den":"3"},{"exp":5,"num":"2","den":"3"}]})");
  EXPECT_EQ(combo_from_json(to_json(c)), c);
  const PowerSumCombo with_const = combo({{-1, "3"}, {2, "3"}});
  EXPECT_EQ(combo_from_json(to_json(with_const)), with_const);
  const Polynomial p = faulhaber(7);
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"terms":[{"exp":-1,"num":"1","den":"1"}]})")),
               std::invalid_argument);
}

TEST(Json, FormQuadruple) {
  const FormQuadruple fq = sandor_generate(test::seed(1, 8, 6, 9));
  const Json j = to_json(fq);
  EXPECT_EQ(j["kind"], "cubic");
  EXPECT_EQ(j["q"][0].dump(), R"({"alpha":"7","beta":"17","gamma":"-6"})");
  EXPECT_EQ(j["seed"].dump(), R"(["1","8","6","9"])");
  EXPECT_EQ(form_quadruple_from_json(j), fq);
  FormQuadruple bare = test::forms_1689();
  EXPECT_TRUE(to_json(bare)["seed"].is_null());
  EXPECT_EQ(form_quadruple_from_json(to_json(bare)), bare);
  EXPECT_THROW(seed_from_json(Json::parse(R"(["1","2","3","4"])")), InvalidSeed);
  EXPECT_THROW(form_quadruple_from_json(Json::parse(R"({"q":[]})")), std::invalid_argument);
}

TEST(Json, RelationProvenance) {
  const ComboQuadruple cq = build_relation(test::forms_1689(), RelationMode::q(1, 2));
  const Json j = to_json(cq);
  EXPECT_EQ(j["common_factor"].dump(), R"({"num":"1","den":"6"})");
  EXPECT_EQ(j["provenance"]["mode"], "Q:1,2");
  EXPECT_EQ(j["combos"].size(), 4u);
  const Json e = to_json(expand_relation(cq));
  EXPECT_EQ(e["variable"], "u");
  EXPECT_EQ(e["scale"].dump(), R"({"num":"3","den":"1"})");
}

TEST(Json, SolutionRecordSchema) {
  const auto [reduced, g] = canonicalize(test::quad(1, 12, -10, 9));
  SolutionRecord r{test::seed(1, 6, 8, 9), "cubic", std::nullopt, {1, 2}, test::quad(1, 12, -10, 9),
                   reduced, g, Rational(3), detect_taxicab(reduced)};
  EXPECT_EQ(to_json(r).dump(),
            R"({"seed":["1","6","8","9"],"mode":"cubic","uv":["1","2"],"raw":["1","12","-10","9"],)"
            R"("reduced":["-10","1","12","9"],"content":"1","ratio":{"num":"3","den":"1"},)"
            R"("taxicab":"1729"})");
  const SolutionRecord back = record_from_json(to_json(r));
  EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
  EXPECT_TRUE(verify_record(back));
  r.content = 2;
  EXPECT_FALSE(verify_record(r));
}

TEST(Latex, Scalars) {
  EXPECT_EQ(latex::rational(Rational::parse("-1/2")), "-\\frac{1}{2}");
  EXPECT_EQ(latex::rational(Rational(7)), "7");
  EXPECT_EQ(latex::combo(square(2)), "\\frac{1}{3}S_3 + \\frac{2}{3}S_5");
  EXPECT_EQ(latex::combo(PowerSumCombo()), "0");
  EXPECT_EQ(latex::combo(combo({{-1, "3"}, {2, "3"}})), "3 + 3S_2");
  EXPECT_EQ(latex::form({Integer(24), Integer(-15), Integer(-1)}), "24u^2 - 15uv - v^2");
  EXPECT_EQ(latex::form({Integer(0), Integer(1), Integer(0)}), "uv");
}

TEST(Latex, TableOne) {
  const std::array<const char*, 6> rows = {
      R"(\frac{1}{3} n^3 + \frac{1}{2} n^2 + \frac{1}{6} n)",
      R"(\frac{1}{4} n^4 + \frac{1}{2} n^3 + \frac{1}{4} n^2)",
      R"(\frac{1}{5} n^5 + \frac{1}{2} n^4 + \frac{1}{3} n^3 - \frac{1}{30}n)",
      R"(\frac{1}{6} n^6 + \frac{1}{2} n^5 + \frac{5}{12} n^4 - \frac{1}{12}n^2)",
      R"(\frac{1}{7} n^7 + \frac{1}{2} n^6 + \frac{1}{2} n^5 - \frac{1}{6}n^3 + \frac{1}{42}n)",
      R"(\frac{1}{8} n^8 + \frac{1}{2} n^7 + \frac{7}{12} n^6 - \frac{7}{24}n^4 + \frac{1}{12}n^2)",
  };
  for (unsigned k = 2; k <= 7; ++k) expect_same_tex(latex::polynomial(faulhaber(k)), rows[k - 2]);
}

TEST(Latex, SixFormsGolden) {
  expect_same_tex(latex::form_quadruple(test::forms_1689()),
                  R"((3u^2 +15uv -8v^2)^3 + (18u^2 -21uv +9v^2)^3
                     + (24u^2 -15uv -v^2)^3 = (27u^2 -21uv + 6v^2)^3)");
}

TEST(Latex, QOneTwoRelationGolden) {
  expect_same_tex(
      latex::relation(build_relation(test::forms_1689(), RelationMode::q(1, 2))),
      R"(\big( 15S_2 +2S_3 +75S_4 -32S_5 \big)^3 + \big( -21S_2 +126 S_3 -105S_4 + 36S_5 \big)^3
         + \big( -15S_2 +142S_3 -75S_4 -4S_5 \big)^3 = \big( -21S_2 +174S_3 -105S_4 +24S_5 \big)^3)");
}

TEST(Latex, OcticIdentityGolden) {
  const PolyIdentity pi =
      expand_relation(build_relation(test::forms_1869(), RelationMode::f(2)));
  expect_same_tex(latex::relation(pi),
                  R"(\big( 28u^2 +270u^3 +820u^4 +1038u^5 +502u^6 -12u^7 -54u^8 \big)^3
      + \big( 224u^2 + 1134u^3 + 1943u^4 +1122u^5 -88u^6 -96u^7 +81u^8 \big)^3
      + \big( 168u^2 + 906u^3 + 1665u^4 +1062u^5 -96u^6 -240u^7 -9u^8 \big)^3
      = \big( 252u^2 + 1302u^3 + 2298u^4 +1422u^5 -30u^6 -132u^7 +72u^8 \big)^3)");
  expect_same_tex(latex::relation(factor_common_root(pi).quotient),
                  R"(\big( 28 + 214 u + 364 u^2 + 96 u^3 - 54 u^4 \big)^3
      + \big( 224 + 686 u + 347 u^2 - 258 u^3 + 81 u^4 \big)^3
      + \big( 168 + 570 u + 357 u^2 - 222 u^3 - 9 u^4 \big)^3
      = \big( 252 + 798 u + 450 u^2 - 276 u^3 + 72 u^4 \big)^3)");
}

TEST(Latex, SquareDisplays) {
  const SquareFormTriple t = piezas_degenerate_triple(
      PythagoreanQuadruple(Integer(8), Integer(9), Integer(12), Integer(17)), Integer(15));
  expect_same_tex(latex::square_forms(t),
                  R"((8u^2 - 34uv + 8v^2)^2 + (15u^2 - 15v^2)^2 = (17u^2 - 16uv + 17v^2)^2)");
  auto q = powersum_quadruple(2);
  for (auto& c : q) c *= Rational(3);
  expect_same_tex(latex::square_relation(q),
                  R"(\big(3S_2 \big)^2 + \big(3+3S_2 \big)^2 + \big(3S_2 +S_3 +2S_5 \big)^2
                     = \big(3+3S_2 +S_3 +2S_5 \big)^2)");
}

}  // namespace
}  // namespace psf
