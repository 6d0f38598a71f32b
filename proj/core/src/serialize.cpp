#include "psf/serialize.hpp"

#include <stdexcept>

namespace psf {

namespace {

Json terms_to_json(const auto& terms) {
  Json arr = Json::array();
  for (const auto& [exp, c] : terms) {
    arr.push_back({{"exp", exp}, {"num", to_string(c.num())}, {"den", to_string(c.den())}});
  }
  return Json{{"terms", arr}};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

template <std::size_t N>
std::array<Integer, N> integers_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw std::invalid_argument(std::string(what) + " must be an array of " + std::to_string(N) +
                                " integers");
  }
  std::array<Integer, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = integer_from_json(j[i]);
  return out;
}

template <std::size_t N>
Json integers_to_json(const std::array<Integer, N>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(integer_to_json(v));
  return arr;
}

IntRange range_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be [lo, hi]");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

Json integer_to_json(const Integer& value) { return to_string(value); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return parse_integer(j.dump());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const Rational& r) {
  return {{"num", to_string(r.num())}, {"den", to_string(r.den())}};
}

Rational rational_from_json(const Json& j) {
  return Rational(integer_from_json(field(j, "num")), integer_from_json(field(j, "den")));
}

Json to_json(const PowerSumCombo& combo) { return terms_to_json(combo.terms()); }

PowerSumCombo combo_from_json(const Json& j) {
  PowerSumCombo out;
  for (const auto& t : field(j, "terms")) {
    out += PowerSumCombo::single(field(t, "exp").get<int>(), rational_from_json(t));
  }
  return out;
}

Json to_json(const Polynomial& p) { return terms_to_json(p.terms()); }

Polynomial polynomial_from_json(const Json& j) {
  Polynomial out;
  for (const auto& t : field(j, "terms")) {
    const int exp = field(t, "exp").get<int>();
    if (exp < 0) throw std::invalid_argument("negative polynomial degree");
    out += Polynomial::monomial(static_cast<unsigned>(exp), rational_from_json(t));
  }
  return out;
}

Json to_json(const BinaryQuadraticForm& form) {
  return {{"alpha", integer_to_json(form.alpha)},
          {"beta", integer_to_json(form.beta)},
          {"gamma", integer_to_json(form.gamma)}};
}

BinaryQuadraticForm form_from_json(const Json& j) {
  return {integer_from_json(field(j, "alpha")), integer_from_json(field(j, "beta")),
          integer_from_json(field(j, "gamma"))};
}

Json to_json(const CubicQuadruple& seed) { return integers_to_json(seed.values()); }

CubicQuadruple seed_from_json(const Json& j) {
  auto v = integers_from_json<4>(j, "seed");
  return CubicQuadruple(v[0], v[1], v[2], v[3]);
}

Json to_json(const FormQuadruple& fq) {
  Json q = Json::array();
  for (const auto& f : fq.q) q.push_back(to_json(f));
  Json out{{"kind", "cubic"}, {"q", q}};
  out["seed"] = fq.seed ? to_json(*fq.seed) : Json(nullptr);
  return out;
}

FormQuadruple form_quadruple_from_json(const Json& j) {
  const Json& q = field(j, "q");
  if (!q.is_array() || q.size() != 4) throw std::invalid_argument("'q' must hold four forms");
  FormQuadruple fq;
  for (std::size_t i = 0; i < 4; ++i) fq.q[i] = form_from_json(q[i]);
  if (j.contains("seed") && !j["seed"].is_null()) fq.seed = seed_from_json(j["seed"]);
  return fq;
}

Json to_json(const SquareFormQuadruple& fq) {
  Json q = Json::array();
  for (const auto& f : fq.q) q.push_back(to_json(f));
  return {{"kind", "square"}, {"q", q}};
}

Json to_json(const SquareFormTriple& ft) {
  Json q = Json::array();
  for (const auto& f : ft) q.push_back(to_json(f));
  return {{"kind", "square"}, {"q", q}};
}

SquareFormQuadruple square_quadruple_from_json(const Json& j) {
  const Json& q = field(j, "q");
  if (!q.is_array() || q.size() != 4) throw std::invalid_argument("'q' must hold four forms");
  SquareFormQuadruple fq;
  for (std::size_t i = 0; i < 4; ++i) fq.q[i] = form_from_json(q[i]);
  return fq;
}

Json to_json(const ComboQuadruple& cq) {
  Json combos = Json::array();
  for (const auto& c : cq.c) combos.push_back(to_json(c));
  Json provenance{{"mode", cq.mode.to_string()}, {"forms", to_json(cq.forms)}};
  return {{"combos", combos}, {"common_factor", to_json(cq.common_factor)},
          {"provenance", provenance}};
}

ComboQuadruple combo_quadruple_from_json(const Json& j) {
  const Json& combos = field(j, "combos");
  if (!combos.is_array() || combos.size() != 4) {
    throw std::invalid_argument("'combos' must hold four combinations");
  }
  ComboQuadruple cq;
  for (std::size_t i = 0; i < 4; ++i) cq.c[i] = combo_from_json(combos[i]);
  cq.common_factor = rational_from_json(field(j, "common_factor"));
  const Json& provenance = field(j, "provenance");
  cq.mode = RelationMode::parse(field(provenance, "mode").get<std::string>());
  cq.forms = form_quadruple_from_json(field(provenance, "forms"));
  return cq;
}

Json to_json(const PolyIdentity& pi) {
  Json polys = Json::array();
  for (const auto& p : pi.p) polys.push_back(to_json(p));
  return {{"variable", "u"}, {"polynomials", polys}, {"scale", to_json(pi.scale)}};
}

PolyIdentity poly_identity_from_json(const Json& j) {
  const Json& polys = field(j, "polynomials");
  if (!polys.is_array() || polys.size() != 4) {
    throw std::invalid_argument("'polynomials' must hold four polynomials");
  }
  PolyIdentity pi;
  for (std::size_t i = 0; i < 4; ++i) pi.p[i] = polynomial_from_json(polys[i]);
  if (j.contains("scale")) pi.scale = rational_from_json(j["scale"]);
  return pi;
}

Json to_json(const RootFactorization& rf) {
  return {{"divisor", to_json(rf.divisor)},
          {"zero_order", rf.zero_order},
          {"minus_one_order", rf.minus_one_order},
          {"quotient", to_json(rf.quotient)}};
}

Json to_json(const SolutionRecord& r) {
  Json out{{"seed", to_json(r.seed)},
           {"mode", r.mode},
           {"uv", integers_to_json(r.uv)},
           {"raw", integers_to_json(r.raw)},
           {"reduced", integers_to_json(r.reduced)},
           {"content", integer_to_json(r.content)},
           {"ratio", to_json(r.ratio)}};
  out["taxicab"] = r.taxicab ? integer_to_json(*r.taxicab) : Json(nullptr);
  if (r.n) out["n"] = integer_to_json(*r.n);
  return out;
}

SolutionRecord record_from_json(const Json& j) {
  std::optional<Integer> taxicab;
  if (!field(j, "taxicab").is_null()) taxicab = integer_from_json(j["taxicab"]);
  std::optional<Integer> n;
  if (j.contains("n") && !j["n"].is_null()) n = integer_from_json(j["n"]);
  return SolutionRecord{seed_from_json(field(j, "seed")),
                        j.contains("mode") ? j["mode"].get<std::string>() : std::string("cubic"),
                        std::move(n),
                        integers_from_json<2>(field(j, "uv"), "uv"),
                        integers_from_json<4>(field(j, "raw"), "raw"),
                        integers_from_json<4>(field(j, "reduced"), "reduced"),
                        integer_from_json(field(j, "content")),
                        rational_from_json(field(j, "ratio")),
                        std::move(taxicab)};
}

SearchConfig config_from_json(const Json& j) {
  SearchConfig cfg;
  cfg.u_range = range_from_json(field(j, "u_range"), "u_range");
  cfg.v_range = range_from_json(field(j, "v_range"), "v_range");
  for (const auto& s : field(j, "seeds")) cfg.seeds.push_back(seed_from_json(s));
  if (j.contains("modes")) {
    cfg.modes.clear();
    for (const auto& m : j["modes"]) cfg.modes.push_back(SearchMode::parse(m.get<std::string>()));
  }
  if (j.contains("dedupe")) cfg.dedupe = j["dedupe"].get<bool>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("allow_large")) cfg.allow_large = j["allow_large"].get<bool>();
  if (j.contains("threads") && !j["threads"].is_null()) cfg.threads = j["threads"].get<unsigned>();
  return cfg;
}

Json to_json(const SearchConfig& cfg) {
  Json seeds = Json::array();
  for (const auto& s : cfg.seeds) seeds.push_back(to_json(s));
  Json modes = Json::array();
  for (const auto& m : cfg.modes) modes.push_back(m.to_string());
  Json out{{"u_range", Json::array({cfg.u_range.lo, cfg.u_range.hi})},
           {"v_range", Json::array({cfg.v_range.lo, cfg.v_range.hi})},
           {"seeds", seeds},
           {"modes", modes},
           {"dedupe", cfg.dedupe},
           {"output", cfg.output.string()},
           {"allow_large", cfg.allow_large}};
  if (cfg.threads) out["threads"] = *cfg.threads;
  return out;
}

}  // namespace psf
