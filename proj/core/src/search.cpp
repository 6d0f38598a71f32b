#include "psf/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "psf/serialize.hpp"

namespace psf {

namespace {

Integer cube(const Integer& x) { return x * x * x; }

bool has_zero(const Quad& q) {
  return std::any_of(q.begin(), q.end(), [](const Integer& x) { return x == 0; });
}

// One family to evaluate: a seed paired with a mode.
struct Job {
  std::size_t seed_index = 0;
  SearchMode mode;
  FormQuadruple forms;
  std::optional<ComboQuadruple> relation;
  Rational ratio;
};

// One u-row of a job; the unit of parallel work.
struct Row {
  std::size_t job = 0;
  std::int64_t u = 0;
};

struct RowOutput {
  std::vector<SolutionRecord> records;
  std::uint64_t points = 0;
  std::uint64_t degenerate = 0;
};

SolutionRecord make_record(const CubicQuadruple& seed, const Job& job, const Quad& raw,
                           std::array<Integer, 2> uv, std::optional<Integer> n) {
  auto [reduced, content] = canonicalize(raw);
  auto taxicab = detect_taxicab(reduced);
  return SolutionRecord{seed,    job.mode.to_string(), std::move(n), std::move(uv), raw,
                        reduced, content,              job.ratio,    std::move(taxicab)};
}

RowOutput evaluate_row(const SearchConfig& cfg, const Job& job, std::int64_t u) {
  RowOutput out;
  const CubicQuadruple& seed = cfg.seeds[job.seed_index];
  if (job.mode.is_cubic()) {
    const Integer uu(static_cast<long>(u));
    for (std::int64_t v = cfg.v_range.lo; v <= cfg.v_range.hi; ++v) {
      if (u == 0 && v == 0) continue;
      ++out.points;
      const Integer vv(static_cast<long>(v));
      Quad raw = evaluate_forms(job.forms, uu, vv);
      if (has_zero(raw)) {
        ++out.degenerate;
        continue;
      }
      out.records.push_back(make_record(seed, job, raw, {uu, vv}, std::nullopt));
    }
    return out;
  }

  ++out.points;
  const RelationMode& mode = *job.mode.relation;
  const Integer n(static_cast<long>(u));
  Quad raw;
  for (std::size_t i = 0; i < 4; ++i) raw[i] = eval_combo(job.relation->c[i], n).to_integer();
  if (has_zero(raw)) {
    ++out.degenerate;
    return out;
  }
  std::array<Integer, 2> uv;
  if (mode.kind == RelationMode::Kind::Q) {
    uv = {eval_powersum(mode.k, n).to_integer(), eval_powersum(mode.m, n).to_integer()};
  } else {
    Integer s1 = eval_powersum(1, n).to_integer();
    Integer s1k = 1;
    for (unsigned i = 0; i < mode.k; ++i) s1k *= s1;
    uv = {eval_powersum(2, n).to_integer(), s1k};
  }
  out.records.push_back(make_record(seed, job, raw, std::move(uv), n));
  return out;
}

}  // namespace

std::pair<Quad, Integer> canonicalize(const Quad& q) {
  Integer g = 0;
  for (const auto& x : q) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("cannot canonicalize the all-zero tuple");
  if (cube(q[0]) + cube(q[1]) + cube(q[2]) != cube(q[3])) {
    throw std::invalid_argument("tuple is not a solution of a^3 + b^3 + c^3 = d^3");
  }
  Quad out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = q[i] / g;
  if (out[3] < 0) {
    for (auto& x : out) x = -x;
  }
  std::sort(out.begin(), out.begin() + 3);
  return {out, g};
}

std::optional<Integer> detect_taxicab(const Quad& canonical) {
  const auto& [x1, x2, x3, d] = canonical;
  if (d <= 0 || !(x1 < 0) || !(x2 > 0)) return std::nullopt;
  const Integer x = -x1;
  // Both decompositions as sorted pairs.
  const auto low_a = std::min(x2, x3), high_a = std::max(x2, x3);
  const auto low_b = std::min(d, x), high_b = std::max(d, x);
  if (low_a == low_b && high_a == high_b) return std::nullopt;
  return cube(x2) + cube(x3);
}

SearchMode SearchMode::parse(std::string_view text) {
  if (text == "cubic") return cubic();
  return SearchMode{RelationMode::parse(text)};
}

std::string SearchMode::to_string() const { return relation ? relation->to_string() : "cubic"; }

std::uint64_t SearchConfig::lattice_points() const {
  std::uint64_t total = 0;
  for (const auto& mode : modes) {
    total += mode.is_cubic() ? u_range.size() * v_range.size() : u_range.size();
  }
  return total * seeds.size();
}

void SearchConfig::validate() const {
  if (u_range.size() == 0) throw std::invalid_argument("u_range is empty");
  if (v_range.size() == 0) throw std::invalid_argument("v_range is empty");
  if (seeds.empty()) throw std::invalid_argument("no seeds given");
  if (modes.empty()) throw std::invalid_argument("no modes given");
  if (!allow_large && lattice_points() > kMaxLatticePoints) {
    throw std::invalid_argument("search covers " + std::to_string(lattice_points()) +
                                " lattice points, above the limit of " +
                                std::to_string(kMaxLatticePoints) + "; set allow_large to override");
  }
}

unsigned resolve_thread_count(const SearchConfig& cfg) {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  unsigned n = cfg.threads.value_or(hw);
  if (const char* env = std::getenv("POWERSUM_FORGE_THREADS"); env != nullptr && *env != '\0') {
    try {
      n = std::min(n, static_cast<unsigned>(std::max(1L, std::stol(env))));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("POWERSUM_FORGE_THREADS is not a number: ") + env);
    }
  }
  return std::max(1U, n);
}

SearchResult run_search(const SearchConfig& cfg, std::set<Quad>* known) {
  cfg.validate();

  std::vector<Job> jobs;
  for (std::size_t s = 0; s < cfg.seeds.size(); ++s) {
    for (const auto& mode : cfg.modes) {
      Job job;
      job.seed_index = s;
      job.mode = mode;
      job.forms = content_reduce(sandor_generate(cfg.seeds[s])).first;
      job.ratio = fraction_ratio(cfg.seeds[s]);
      if (!mode.is_cubic()) job.relation = build_relation(job.forms, *mode.relation);
      jobs.push_back(std::move(job));
    }
  }

  std::vector<Row> rows;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    for (std::int64_t u = cfg.u_range.lo; u <= cfg.u_range.hi; ++u) rows.push_back({j, u});
  }

  std::vector<RowOutput> outputs(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      outputs[i] = evaluate_row(cfg, jobs[rows[i].job], rows[i].u);
    }
  };
  const unsigned n_threads = std::min<std::size_t>(resolve_thread_count(cfg), rows.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  // Ordered merge; dedupe runs here so the first occurrence in (seed, mode,
  // u, v) order always wins.
  SearchResult result;
  std::set<Quad> local;
  std::set<Quad>& seen = known != nullptr ? *known : local;
  for (auto& out : outputs) {
    result.stats.points += out.points;
    result.stats.degenerate += out.degenerate;
    for (auto& record : out.records) {
      if (cfg.dedupe && !seen.insert(record.reduced).second) {
        ++result.stats.duplicates;
        continue;
      }
      result.records.push_back(std::move(record));
    }
  }
  result.stats.emitted = result.records.size();
  return result;
}

bool verify_record(const SolutionRecord& r) {
  if (r.content <= 0 || has_zero(r.reduced)) return false;
  if (!is_cubic_solution(r.reduced) || !is_cubic_solution(r.raw)) return false;
  if (canonicalize(r.raw) != std::make_pair(r.reduced, r.content)) return false;
  if (r.ratio != fraction_ratio(r.seed)) return false;
  return detect_taxicab(r.reduced) == r.taxicab;
}

std::vector<SolutionRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<SolutionRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    SolutionRecord record = [&] {
      try {
        return record_from_json(Json::parse(line));
      } catch (const std::exception& e) {
        throw std::runtime_error(where + ": " + e.what());
      }
    }();
    if (!verify_record(record)) throw std::runtime_error(where + ": record fails verification");
    records.push_back(std::move(record));
  }
  return records;
}

SearchResult run_search_to_file(const SearchConfig& cfg) {
  if (cfg.output.empty()) throw std::invalid_argument("search config has no output path");
  std::set<Quad> known;
  if (cfg.dedupe && std::filesystem::exists(cfg.output)) {
    for (const auto& r : load_records(cfg.output)) known.insert(r.reduced);
  }
  SearchResult result = run_search(cfg, &known);
  std::ofstream out(cfg.output, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + cfg.output.string() + " for writing");
  for (const auto& r : result.records) out << to_json(r).dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + cfg.output.string());
  return result;
}

}  // namespace psf
