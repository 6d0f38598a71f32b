#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psf/search.hpp"
#include "psf/serialize.hpp"
#include "support.hpp"

namespace psf {
namespace {

using test::quad;
using test::seed;

namespace fs = std::filesystem;

SearchConfig grid(std::vector<CubicQuadruple> seeds, std::int64_t lo, std::int64_t hi) {
  SearchConfig cfg;
  cfg.u_range = {lo, hi};
  cfg.v_range = {lo, hi};
  cfg.seeds = std::move(seeds);
  return cfg;
}

std::string dump_records(const SearchResult& r) {
  std::string out;
  for (const auto& rec : r.records) out += to_json(rec).dump() + "\n";
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("psf_search_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(quad(6, 8, 10, 12)), std::make_pair(quad(3, 4, 5, 6), Integer(2)));
  EXPECT_EQ(canonicalize(quad(1, 12, -10, 9)), std::make_pair(quad(-10, 1, 12, 9), Integer(1)));
  EXPECT_EQ(canonicalize(quad(-3, -4, -5, -6)), std::make_pair(quad(3, 4, 5, 6), Integer(1)));
  EXPECT_THROW(canonicalize(quad(0, 0, 0, 0)), std::invalid_argument);
  EXPECT_THROW(canonicalize(quad(1, 2, 3, 4)), std::invalid_argument);
}

TEST(Canonicalize, InvariantUnderScalingSignAndOrder) {
  std::mt19937_64 rng(3);
  for (const auto& b : oracle::base_solutions()) {
    const Quad base = quad(b[0], b[1], b[2], b[3]);
    const auto expected = canonicalize(base).first;
    for (long t : {-7L, -1L, 2L, 13L}) {
      Quad scaled = base;
      for (auto& x : scaled) x *= t;
      std::shuffle(scaled.begin(), scaled.begin() + 3, rng);
      const auto [c, g] = canonicalize(scaled);
      EXPECT_EQ(c, expected);
      EXPECT_EQ(g, std::abs(t) * canonicalize(base).second);
    }
  }
}

TEST(DetectTaxicab, Examples) {
  EXPECT_EQ(detect_taxicab(quad(-10, 1, 12, 9)), Integer(1729));
  EXPECT_EQ(detect_taxicab(quad(-9, 2, 16, 15)), Integer(4104));
  EXPECT_EQ(detect_taxicab(quad(3, 4, 5, 6)), std::nullopt);
  // Two negatives: not a two-cube coincidence.
  EXPECT_EQ(detect_taxicab(canonicalize(quad(-1, -8, 9, 6)).first), std::nullopt);
}

TEST(DetectTaxicab, KnownFamilies) {
  const auto [c1729, g1729] = canonicalize(evaluate_forms(test::forms_1689(), 1, 2));
  EXPECT_EQ(g1729, 1);
  EXPECT_EQ(detect_taxicab(c1729), Integer(1729));
  const Quad raw4104 = evaluate_forms(test::forms_1869(), -1, -3);
  EXPECT_EQ(raw4104, quad(4, 32, -18, 30));
  const auto [c4104, g4104] = canonicalize(raw4104);
  EXPECT_EQ(g4104, 2);
  EXPECT_EQ(c4104, quad(-9, 2, 16, 15));
  EXPECT_EQ(detect_taxicab(c4104), Integer(4104));
  EXPECT_EQ(Integer(2 * 2 * 2 + 16 * 16 * 16), Integer(9 * 9 * 9 + 15 * 15 * 15));
}

TEST(DetectTaxicab, ScalingInvariantAfterCanonicalize) {
  for (long t : {1L, 2L, -3L, 10L}) {
    Quad q = quad(1, 12, -10, 9);
    for (auto& x : q) x *= t;
    EXPECT_EQ(detect_taxicab(canonicalize(q).first), Integer(1729));
  }
}

TEST(SearchConfig, Validation) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9)}, -5, 5);
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.lattice_points(), 121u);
  SearchConfig empty = cfg;
  empty.u_range = {3, 2};
  EXPECT_THROW(empty.validate(), std::invalid_argument);
  SearchConfig none = cfg;
  none.seeds.clear();
  EXPECT_THROW(none.validate(), std::invalid_argument);
  SearchConfig big = grid({seed(1, 6, 8, 9)}, -2000, 2000);
  try {
    big.validate();
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("limit"), std::string::npos);
  }
  big.allow_large = true;
  EXPECT_NO_THROW(big.validate());
  EXPECT_THROW(run_search(grid({seed(1, 6, 8, 9)}, -2000, 2000)), std::invalid_argument);
}

TEST(SearchMode, Parse) {
  EXPECT_TRUE(SearchMode::parse("cubic").is_cubic());
  EXPECT_EQ(SearchMode::parse("Q:1,2").to_string(), "Q:1,2");
  EXPECT_EQ(SearchMode::parse("F:3").to_string(), "F:3");
  EXPECT_THROW(SearchMode::parse("quartic"), std::invalid_argument);
}

TEST(RunSearch, Finds1729) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9)}, -5, 5);
  cfg.dedupe = false;
  const SearchResult r = run_search(cfg);
  bool at_1_2 = false;
  for (const auto& rec : r.records) {
    if (rec.uv == std::array<Integer, 2>{1, 2}) {
      at_1_2 = true;
      EXPECT_EQ(rec.raw, quad(1, 12, -10, 9));
      EXPECT_EQ(rec.taxicab, Integer(1729));
      EXPECT_EQ(rec.ratio, Rational(3));
    }
  }
  EXPECT_TRUE(at_1_2);
  EXPECT_EQ(r.stats.points, 120u);
  EXPECT_EQ(r.stats.points, r.stats.degenerate + r.records.size());
}

TEST(RunSearch, Finds4104WithDedupe) {
  const SearchResult r = run_search(grid({seed(1, 8, 6, 9)}, -5, 5));
  const auto it = std::find_if(r.records.begin(), r.records.end(),
                               [](const SolutionRecord& x) { return x.taxicab == Integer(4104); });
  ASSERT_NE(it, r.records.end());
  EXPECT_EQ(it->uv, (std::array<Integer, 2>{-1, -3}));
  EXPECT_EQ(it->reduced, quad(-9, 2, 16, 15));
  EXPECT_EQ(it->content, 2);
}

TEST(RunSearch, Finds206Family) {
  const SearchResult r = run_search(grid({seed(7, 14, 17, 20)}, -3, 3));
  const auto it = std::find_if(r.records.begin(), r.records.end(), [](const SolutionRecord& x) {
    return x.reduced == quad(5, 163, 164, 206);
  });
  ASSERT_NE(it, r.records.end());
  EXPECT_EQ(it->ratio, Rational(4));
}

TEST(RunSearch, DedupeAndOrdering) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9), seed(1, 8, 6, 9)}, -4, 4);
  const SearchResult r = run_search(cfg);
  std::set<Quad> unique;
  for (const auto& rec : r.records) EXPECT_TRUE(unique.insert(rec.reduced).second);
  EXPECT_GT(r.stats.duplicates, 0u);
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    const auto& a = r.records[i - 1];
    const auto& b = r.records[i];
    if (a.seed == b.seed) {
      EXPECT_LT(a.uv, b.uv);
    }
  }
  std::set<Quad> known = unique;
  const SearchResult again = run_search(cfg, &known);
  EXPECT_TRUE(again.records.empty());
  EXPECT_EQ(known, unique);
}

TEST(RunSearch, RecordsVerify) {
  SearchConfig cfg = grid({seed(3, 4, 5, 6), seed(7, 14, 17, 20)}, -4, 4);
  for (const auto& rec : run_search(cfg).records) {
    EXPECT_TRUE(verify_record(rec));
    EXPECT_TRUE(verify_record(record_from_json(Json::parse(to_json(rec).dump()))));
  }
}

TEST(RunSearch, DeterministicAcrossThreadCounts) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9), seed(1, 8, 6, 9), seed(7, 14, 17, 20)}, -8, 8);
  cfg.modes = {SearchMode::cubic(), SearchMode::parse("Q:1,2"), SearchMode::parse("F:2")};
  cfg.threads = 1;
  const std::string serial = dump_records(run_search(cfg));
  for (unsigned t : {2U, 3U, 8U}) {
    cfg.threads = t;
    EXPECT_EQ(dump_records(run_search(cfg)), serial) << t;
  }
}

TEST(RunSearch, RelationMode) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9)}, 1, 6);
  cfg.modes = {SearchMode::parse("Q:1,2")};
  cfg.dedupe = false;
  const SearchResult r = run_search(cfg);
  ASSERT_EQ(r.records.size(), 6u);
  const auto& first = r.records.front();
  EXPECT_EQ(first.mode, "Q:1,2");
  EXPECT_EQ(first.n, Integer(1));
  EXPECT_EQ(first.raw, quad(60, 36, 48, 72));
  EXPECT_EQ(first.reduced, quad(3, 4, 5, 6));
  EXPECT_EQ(first.content, 12);
  for (const auto& rec : r.records) {
    const long n = rec.n->get_si();
    EXPECT_EQ(rec.uv[0], oracle::direct_power_sum(1, n));
    EXPECT_EQ(rec.uv[1], oracle::direct_power_sum(2, n));
    EXPECT_TRUE(verify_record(rec));
  }
  // n = 0 and n = -1 give the zero tuple and are counted as degenerate.
  cfg.u_range = {-1, 0};
  const SearchResult zeros = run_search(cfg);
  EXPECT_TRUE(zeros.records.empty());
  EXPECT_EQ(zeros.stats.degenerate, 2u);
}

TEST(ResolveThreadCount, EnvironmentCaps) {
  SearchConfig cfg;
  cfg.threads = 8;
  ::setenv("POWERSUM_FORGE_THREADS", "2", 1);
  EXPECT_EQ(resolve_thread_count(cfg), 2u);
  ::setenv("POWERSUM_FORGE_THREADS", "junk", 1);
  EXPECT_THROW(resolve_thread_count(cfg), std::invalid_argument);
  ::unsetenv("POWERSUM_FORGE_THREADS");
  EXPECT_EQ(resolve_thread_count(cfg), 8u);
  cfg.threads = 0;
  EXPECT_EQ(resolve_thread_count(cfg), 1u);
}

TEST_F(TempDir, FileRoundTripAndDedupe) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9), seed(1, 8, 6, 9)}, -6, 6);
  cfg.output = dir_ / "out.jsonl";
  const SearchResult first = run_search_to_file(cfg);
  EXPECT_GT(first.records.size(), 0u);
  const std::string content = slurp(cfg.output);
  const auto loaded = load_records(cfg.output);
  ASSERT_EQ(loaded.size(), first.records.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(to_json(loaded[i]).dump(), to_json(first.records[i]).dump());
  }
  const SearchResult second = run_search_to_file(cfg);
  EXPECT_TRUE(second.records.empty());
  EXPECT_EQ(slurp(cfg.output), content);
}

TEST_F(TempDir, ParallelAndSerialFilesIdentical) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9), seed(7, 14, 17, 20)}, -10, 10);
  cfg.threads = 1;
  cfg.output = dir_ / "serial.jsonl";
  run_search_to_file(cfg);
  cfg.threads = std::max(2U, std::thread::hardware_concurrency());
  cfg.output = dir_ / "parallel.jsonl";
  run_search_to_file(cfg);
  EXPECT_EQ(slurp(dir_ / "serial.jsonl"), slurp(dir_ / "parallel.jsonl"));
}

TEST_F(TempDir, LoadRejectsCorruptedRecords) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9)}, 1, 2);
  cfg.output = dir_ / "out.jsonl";
  run_search_to_file(cfg);
  std::string text = slurp(cfg.output);
  const auto pos = text.find("\"raw\":[\"");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos + 8, "9");
  std::ofstream(dir_ / "bad.jsonl") << text;
  try {
    load_records(dir_ / "bad.jsonl");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("bad.jsonl:1"), std::string::npos) << e.what();
  }
  std::ofstream(dir_ / "junk.jsonl") << "\n{not json\n";
  try {
    load_records(dir_ / "junk.jsonl");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("junk.jsonl:2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_records(dir_ / "missing.jsonl"), std::runtime_error);
}

TEST(SearchConfigJson, RoundTrip) {
  SearchConfig cfg = grid({seed(1, 6, 8, 9)}, -3, 4);
  cfg.modes = {SearchMode::cubic(), SearchMode::parse("F:2")};
  cfg.output = "x.jsonl";
  cfg.threads = 4;
  const SearchConfig back = config_from_json(to_json(cfg));
  EXPECT_EQ(to_json(back).dump(), to_json(cfg).dump());
  EXPECT_EQ(back.u_range.lo, -3);
  EXPECT_EQ(back.v_range.hi, 4);
  EXPECT_THROW(config_from_json(Json::parse(R"({"u_range":[1],"v_range":[1,2],"seeds":[]})")),
               std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"v_range":[1,2],"seeds":[]})")),
               std::invalid_argument);
}

}  // namespace
}  // namespace psf
