#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "psf/psf.hpp"

namespace psf::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Failed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

CubicQuadruple seed_from_text(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--seed expects A,B,C,D; got '" + text + "'");
  return CubicQuadruple(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]),
                        parse_integer(parts[3]));
}

SubstitutionMatrix matrix_from_text(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--subst expects m11,m12,m21,m22; got '" + text + "'");
  SubstitutionMatrix m;
  for (std::size_t i = 0; i < 4; ++i) m[i] = Rational::parse(parts[i]);
  return m;
}

std::string sub(unsigned k) {
  const std::string digits = std::to_string(k);
  return digits.size() == 1 ? digits : "{" + digits + "}";
}

Json combos_to_json(std::span<const PowerSumCombo> combos) {
  Json arr = Json::array();
  for (const auto& c : combos) arr.push_back(to_json(c));
  return arr;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cube_line(const Quad& q) {
  const auto term = [](const Integer& x) {
    return x < 0 ? "(" + to_string(x) + ")^3" : to_string(x) + "^3";
  };
  return term(q[0]) + " + " + term(q[1]) + " + " + term(q[2]) + " = " + term(q[3]);
}

struct Options {
  bool latex = false;

  // bernoulli / faulhaber
  unsigned k = 0;
  unsigned m = 0;

  // combo
  std::string combo_op;
  std::vector<unsigned> combo_args;

  // sandor
  std::vector<std::string> seed_values;
  bool reduce = false;
  std::string subst;

  // relation
  std::string seed_text;
  std::string mode_text;
  bool expand = false;
  bool factor = false;

  // verify / search
  std::string path;
  std::optional<unsigned> threads;
  bool allow_large = false;
  std::string output;

  // quad
  std::vector<std::string> quad_values;
  std::string degenerate;
  std::string u_value;
};

int do_bernoulli(const Options& o, std::ostream& out) {
  const Rational b = bernoulli(o.k);
  if (o.latex) {
    out << "B_" << sub(o.k) << " = " << latex::rational(b) << '\n';
  } else {
    emit(out, Json{{"k", o.k}, {"value", to_json(b)}});
  }
  return kSuccess;
}

int do_faulhaber(const Options& o, std::ostream& out) {
  const Polynomial p = faulhaber(o.k);
  if (o.latex) {
    out << "S_" << sub(o.k) << " = " << latex::polynomial(p) << '\n';
  } else {
    emit(out, Json{{"k", o.k}, {"variable", "n"}, {"polynomial", to_json(p)}});
  }
  return kSuccess;
}

int do_combo(const Options& o, std::ostream& out) {
  const auto& a = o.combo_args;
  const auto need = [&](std::size_t n) {
    if (a.size() != n) {
      throw UsageError("combo " + o.combo_op + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  PowerSumCombo result;
  std::string lhs;
  if (o.combo_op == "product") {
    need(2);
    result = product(a[0], a[1]);
    lhs = "S_" + sub(a[0]) + " S_" + sub(a[1]);
  } else if (o.combo_op == "square") {
    need(1);
    result = square(a[0]);
    lhs = "S_" + sub(a[0]) + "^2";
  } else if (o.combo_op == "s1pow") {
    need(1);
    result = s1_power(a[0]);
    lhs = "S_1^" + sub(a[0]);
  } else if (o.combo_op == "s2s1pow") {
    need(1);
    result = s2_s1_power(a[0]);
    lhs = "S_2 S_1^" + sub(a[0]);
  } else {
    throw UsageError("unknown combo operation '" + o.combo_op + "'");
  }
  if (o.latex) {
    out << lhs << " = " << latex::combo(result) << '\n';
  } else {
    emit(out, Json{{"op", o.combo_op}, {"args", a}, {"combo", to_json(result)}});
  }
  return kSuccess;
}

int do_sandor(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.seed_values.size() != 4) throw UsageError("sandor expects A B C D");
  const CubicQuadruple seed(parse_integer(o.seed_values[0]), parse_integer(o.seed_values[1]),
                            parse_integer(o.seed_values[2]), parse_integer(o.seed_values[3]));
  FormQuadruple fq = sandor_generate(seed);
  std::optional<Integer> content;
  if (o.reduce) {
    auto [reduced, g] = content_reduce(fq);
    fq = std::move(reduced);
    content = g;
  }
  if (!o.subst.empty()) {
    try {
      fq = substitute(fq, matrix_from_text(o.subst));
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  const bool verified = verify_cubic_identity(fq) && check_characterization(seed, fq);
  if (o.latex) {
    out << latex::form_quadruple(fq) << '\n';
  } else {
    Json j = to_json(fq);
    if (content) j["content"] = integer_to_json(*content);
    j["ratio"] = to_json(fraction_ratio(seed));
    j["verified"] = verified;
    emit(out, j);
  }
  if (!verified) {
    err << "error: generated forms fail verification\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int do_relation(const Options& o, std::ostream& out) {
  const CubicQuadruple seed = seed_from_text(o.seed_text);
  const RelationMode mode = RelationMode::parse(o.mode_text);
  const FormQuadruple forms = content_reduce(sandor_generate(seed)).first;
  const ComboQuadruple cq = build_relation(forms, mode);
  const bool expand = o.expand || o.factor;
  std::optional<PolyIdentity> identity;
  std::optional<RootFactorization> factored;
  if (expand) identity = expand_relation(cq);
  if (o.factor) factored = factor_common_root(*identity);

  if (o.latex) {
    out << latex::relation(cq) << '\n';
    if (identity) out << latex::relation(*identity) << '\n';
    if (factored) out << latex::relation(factored->quotient) << '\n';
    return kSuccess;
  }
  Json j = to_json(cq);
  if (identity) j["identity"] = to_json(*identity);
  if (factored) j["factorization"] = to_json(*factored);
  emit(out, j);
  return kSuccess;
}

PythagoreanQuadruple pythagorean_from(const std::vector<std::string>& v) {
  return PythagoreanQuadruple(parse_integer(v.at(0)), parse_integer(v.at(1)), parse_integer(v.at(2)),
                              parse_integer(v.at(3)));
}

int do_piezas(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.quad_values.size() != 4) throw UsageError("quad piezas expects A B C D");
  const PythagoreanQuadruple pq = pythagorean_from(o.quad_values);
  bool verified = false;
  if (!o.degenerate.empty()) {
    const SquareFormTriple t = piezas_degenerate_triple(pq, parse_integer(o.degenerate));
    verified = verify_square_identity(t);
    if (o.latex) {
      out << latex::square_forms(t) << '\n';
    } else {
      Json j = to_json(t);
      j["verified"] = verified;
      emit(out, j);
    }
  } else {
    const SquareFormQuadruple fq = piezas_generate(pq);
    verified = verify_square_identity(fq);
    if (o.latex) {
      out << latex::square_forms(fq) << '\n';
    } else {
      Json j = to_json(fq);
      j["verified"] = verified;
      emit(out, j);
    }
  }
  if (!verified) {
    err << "error: forms fail verification\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int emit_square_combos(std::span<const PowerSumCombo> combos, const Json& header, bool latex,
                       std::ostream& out, std::ostream& err) {
  const bool verified = square_residual(combos).is_zero();
  if (latex) {
    out << latex::square_relation(combos) << '\n';
  } else {
    Json j = header;
    j["kind"] = "powersum-square";
    j["combos"] = combos_to_json(combos);
    j["verified"] = verified;
    emit(out, j);
  }
  if (!verified) {
    err << "error: sum of squares does not verify\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int do_equal_sums(const Options& o, std::ostream& out) {
  const Integer u = parse_integer(o.u_value);
  const auto [lhs, rhs] = equal_sums_family(u);
  const Integer sum = lhs.first * lhs.first + lhs.second * lhs.second;
  if (o.latex) {
    const auto sq = [](const Integer& x) {
      return x < 0 ? "(" + to_string(x) + ")^2" : to_string(x) + "^2";
    };
    out << sq(lhs.first) << " + " << sq(lhs.second) << " = " << sq(rhs.first) << " + "
        << sq(rhs.second) << '\n';
  } else {
    emit(out, Json{{"u", integer_to_json(u)},
                   {"lhs", Json::array({integer_to_json(lhs.first), integer_to_json(lhs.second)})},
                   {"rhs", Json::array({integer_to_json(rhs.first), integer_to_json(rhs.second)})},
                   {"sum", integer_to_json(sum)}});
  }
  return kSuccess;
}

// Verifies one JSON document produced by another subcommand.
std::pair<std::string, bool> verify_document(const Json& j) {
  if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "cubic") {
      const FormQuadruple fq = form_quadruple_from_json(j);
      bool ok = verify_cubic_identity(fq);
      if (ok && fq.seed) ok = check_characterization(*fq.seed, fq);
      return {kind, ok};
    }
    if (kind == "square") {
      const Json& q = j.at("q");
      if (q.is_array() && q.size() == 3) {
        SquareFormTriple t;
        for (std::size_t i = 0; i < 3; ++i) t[i] = form_from_json(q[i]);
        return {kind, verify_square_identity(t)};
      }
      return {kind, verify_square_identity(square_quadruple_from_json(j))};
    }
    if (kind == "powersum-square") {
      std::vector<PowerSumCombo> combos;
      for (const auto& c : j.at("combos")) combos.push_back(combo_from_json(c));
      if (combos.size() < 2) throw std::invalid_argument("need at least two combinations");
      return {kind, square_residual(combos).is_zero()};
    }
    throw std::invalid_argument("unknown kind '" + kind + "'");
  }
  if (j.contains("combos")) {
    const ComboQuadruple cq = combo_quadruple_from_json(j);
    bool ok = verify_cubic_identity(cq.forms);
    if (ok) {
      try {
        expand_relation(cq);
      } catch (const VerificationFailure&) {
        ok = false;
      }
    }
    if (ok && j.contains("identity")) ok = verify_poly_identity(poly_identity_from_json(j["identity"]));
    return {"relation", ok};
  }
  if (j.contains("polynomials")) return {"identity", verify_poly_identity(poly_identity_from_json(j))};
  if (j.contains("reduced")) return {"record", verify_record(record_from_json(j))};
  throw std::invalid_argument("unrecognized document");
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(o.path);
  const Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded() && whole.is_object()) {
    std::pair<std::string, bool> result;
    try {
      result = verify_document(whole);
    } catch (const std::exception& e) {
      throw UsageError(o.path + ": " + e.what());
    }
    if (o.latex) {
      out << result.first << ": " << (result.second ? "verified" : "FAILED") << '\n';
    } else {
      emit(out, Json{{"file", o.path}, {"kind", result.first}, {"verified", result.second}});
    }
    if (!result.second) err << "error: " << o.path << " fails verification\n";
    return result.second ? kSuccess : kVerificationFailed;
  }

  // JSON lines of solution records.
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0, count = 0;
  std::vector<std::size_t> bad;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    SolutionRecord record = [&] {
      try {
        return record_from_json(Json::parse(line));
      } catch (const std::exception& e) {
        throw UsageError(o.path + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }();
    ++count;
    if (!verify_record(record)) bad.push_back(line_no);
  }
  for (std::size_t n : bad) err << "error: " << o.path << ":" << n << ": record fails verification\n";
  if (o.latex) {
    out << count << " records, " << bad.size() << " failed\n";
  } else {
    emit(out, Json{{"file", o.path},
                   {"kind", "records"},
                   {"records", count},
                   {"failed", bad.size()},
                   {"verified", bad.empty()}});
  }
  return bad.empty() ? kSuccess : kVerificationFailed;
}

int do_search(const Options& o, std::ostream& out) {
  Json config_json;
  try {
    config_json = Json::parse(read_file(o.path));
  } catch (const Json::exception& e) {
    throw UsageError(o.path + ": " + e.what());
  }
  SearchConfig cfg;
  try {
    cfg = config_from_json(config_json);
  } catch (const Json::exception& e) {
    throw UsageError(o.path + ": " + e.what());
  }
  if (o.threads) cfg.threads = o.threads;
  if (o.allow_large) cfg.allow_large = true;
  if (!o.output.empty()) cfg.output = o.output;

  SearchResult result = cfg.output.empty() ? run_search(cfg) : run_search_to_file(cfg);
  if (o.latex) {
    for (const auto& r : result.records) {
      out << cube_line(r.reduced);
      if (r.taxicab) out << "  % taxicab " << to_string(*r.taxicab);
      out << '\n';
    }
    return kSuccess;
  }
  if (cfg.output.empty()) {
    for (const auto& r : result.records) out << to_json(r).dump() << '\n';
    return kSuccess;
  }
  emit(out, Json{{"output", cfg.output.string()},
                 {"points", result.stats.points},
                 {"degenerate", result.stats.degenerate},
                 {"duplicates", result.stats.duplicates},
                 {"emitted", result.stats.emitted}});
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact power-sum and quadratic-form identities for a^3 + b^3 + c^3 = d^3",
               "psforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--latex", o.latex, "Print LaTeX instead of JSON");

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_K (B_1 = -1/2)");
  bern->add_option("K", o.k)->required();

  auto* faul = app.add_subcommand("faulhaber", "S_K as a polynomial in n");
  faul->add_option("K", o.k)->required();

  auto* combo = app.add_subcommand("combo", "Products and powers of power sums");
  combo->add_option("OP", o.combo_op, "product | square | s1pow | s2s1pow")->required();
  combo->add_option("ARGS", o.combo_args)->required();

  auto* sandor = app.add_subcommand("sandor", "Quadratic-form family from a seed solution");
  sandor->add_option("SEED", o.seed_values, "A B C D")->required()->expected(4);
  sandor->add_flag("--reduce", o.reduce, "Divide out the joint content");
  sandor->add_option("--subst", o.subst, "Substitution matrix m11,m12,m21,m22 (rationals)");

  auto* verify = app.add_subcommand("verify", "Re-verify a JSON document or a JSONL record file");
  verify->add_option("FILE", o.path)->required();

  auto* relation = app.add_subcommand("relation", "Cubic relation among power sums");
  relation->add_option("--seed", o.seed_text, "A,B,C,D")->required();
  relation->add_option("--mode", o.mode_text, "Q:k,m or F:k")->required();
  relation->add_flag("--expand", o.expand, "Expand into a polynomial identity");
  relation->add_flag("--factor", o.factor, "Also divide out u^s (u+1)^t");

  auto* quad = app.add_subcommand("quad", "Quadratic identities");
  quad->require_subcommand(1);
  auto* piezas = quad->add_subcommand("piezas", "Forms for a^2 + b^2 + c^2 = d^2");
  piezas->add_option("QUAD", o.quad_values, "A B C D")->required()->expected(4);
  piezas->add_option("--degenerate", o.degenerate, "E with b^2 + c^2 = E^2");
  auto* quadruple = quad->add_subcommand("quadruple", "Power-sum Pythagorean quadruple");
  quadruple->add_option("K", o.k)->required();
  auto* triple = quad->add_subcommand("triple", "Power-sum Pythagorean triple");
  triple->add_option("K", o.k)->required();
  triple->add_option("M", o.m)->required();
  auto* equal = quad->add_subcommand("equal-sums", "(2u-2)^2 + (4u+1)^2 = (2u+2)^2 + (4u-1)^2");
  equal->add_option("U", o.u_value)->required();

  auto* search = app.add_subcommand("search", "Grid search over generated families");
  search->add_option("--config", o.path, "JSON config file")->required();
  search->add_option("--threads", o.threads, "Worker threads");
  search->add_flag("--allow-large", o.allow_large, "Lift the lattice-point limit");
  search->add_option("--output", o.output, "Append records to this JSONL file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*bern) return do_bernoulli(o, out);
    if (*faul) return do_faulhaber(o, out);
    if (*combo) return do_combo(o, out);
    if (*sandor) return do_sandor(o, out, err);
    if (*verify) return do_verify(o, out, err);
    if (*relation) return do_relation(o, out);
    if (*piezas) return do_piezas(o, out, err);
    if (*quadruple) {
      const auto combos = powersum_quadruple(o.k);
      return emit_square_combos(combos, Json{{"k", o.k}}, o.latex, out, err);
    }
    if (*triple) {
      const auto combos = powersum_triple(o.k, o.m);
      return emit_square_combos(combos, Json{{"k", o.k}, {"m", o.m}}, o.latex, out, err);
    }
    if (*equal) return do_equal_sums(o, out);
    if (*search) return do_search(o, out);
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Failed& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace psf::cli
