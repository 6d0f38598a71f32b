#pragma once

// Grid search over generated families for numeric cubic solutions.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psf/cubic_forms.hpp"
#include "psf/identities.hpp"

namespace psf {

using Quad = std::array<Integer, 4>;

/// Divides by the content g, makes the fourth entry positive (cubes are odd)
/// and sorts the first three ascending. Returns (canonical, g).
/// Throws std::invalid_argument for the all-zero tuple or a non-solution.
std::pair<Quad, Integer> canonicalize(const Quad& q);

/// For a canonical quadruple (x1 <= x2 <= x3, d > 0) with exactly one
/// negative among the first three, x1 = -x: returns N = x2^3 + x3^3 = d^3 + x^3
/// when {x2, x3} and {d, x} are distinct pairs of positive integers.
std::optional<Integer> detect_taxicab(const Quad& canonical);

/// "cubic" evaluates the forms over the (u, v) grid; a relation mode
/// evaluates the power-sum relation at every n in the u range.
struct SearchMode {
  std::optional<RelationMode> relation;

  static SearchMode cubic() { return {}; }
  static SearchMode parse(std::string_view text);
  std::string to_string() const;
  bool is_cubic() const { return !relation.has_value(); }
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::uint64_t size() const { return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
};

struct SearchConfig {
  static constexpr std::uint64_t kMaxLatticePoints = 10'000'000;

  IntRange u_range;
  IntRange v_range;
  std::vector<CubicQuadruple> seeds;
  std::vector<SearchMode> modes{SearchMode::cubic()};
  bool dedupe = true;
  std::filesystem::path output;
  /// Lifts the lattice-point guardrail.
  bool allow_large = false;
  /// Worker count; unset means POWERSUM_FORGE_THREADS or hardware concurrency.
  std::optional<unsigned> threads;

  std::uint64_t lattice_points() const;
  /// Throws std::invalid_argument on empty ranges, no seeds or an exceeded guardrail.
  void validate() const;
};

struct SolutionRecord {
  CubicQuadruple seed;
  std::string mode;
  /// Power-sum argument for relation modes.
  std::optional<Integer> n;
  /// Arguments the seed's forms were evaluated at.
  std::array<Integer, 2> uv;
  Quad raw;
  Quad reduced;
  Integer content;
  Rational ratio;
  std::optional<Integer> taxicab;
};

struct SearchStats {
  std::uint64_t points = 0;
  /// Tuples skipped for containing a zero entry.
  std::uint64_t degenerate = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t emitted = 0;
};

struct SearchResult {
  std::vector<SolutionRecord> records;
  SearchStats stats;
};

/// Worker count for cfg.
unsigned resolve_thread_count(const SearchConfig& cfg);

/// Runs the search. Records come out ordered by seed, mode, u, v regardless
/// of the worker count. With cfg.dedupe, canonical quadruples already in
/// `known` or seen earlier in the run are dropped; new ones are added to
/// `known` when it is given.
SearchResult run_search(const SearchConfig& cfg, std::set<Quad>* known = nullptr);

/// Reads a JSONL record file, re-verifying every record. Throws
/// std::runtime_error naming the path and line on I/O or verification errors.
std::vector<SolutionRecord> load_records(const std::filesystem::path& path);

/// Checks the cubic equation and the raw/reduced/content/ratio consistency.
bool verify_record(const SolutionRecord& record);

/// run_search plus persistence: loads cfg.output (when deduping and it
/// exists), then appends the new records as JSON lines.
SearchResult run_search_to_file(const SearchConfig& cfg);

}  // namespace psf
