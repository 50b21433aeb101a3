#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rankfill/cli.hpp"
#include "rankfill/triplets.hpp"
#include "test_util.hpp"

using namespace rankfill;
using nlohmann::json;

namespace {

int run(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.push_back("rankfill");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(int(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json slurp_json(const std::filesystem::path& path) {
  return json::parse(slurp(path));
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

// Synthetic dataset with offset raw ids so the id maps are exercised.
Dataset make_dataset(int users, int items, double fraction, std::uint64_t seed) {
  Rng rng(seed);
  const Eigen::MatrixXd truth =
      testutil::low_rank_nonneg(users, items, 3, rng);
  RatingMatrix m = testutil::sample_observed(truth, fraction, rng);
  Dataset d{std::move(m), {}, {}};
  for (int u = 0; u < users; ++u) d.user_ids.push_back(100 + u);
  for (int i = 0; i < items; ++i) d.item_ids.push_back(500 + i);
  return d;
}

std::string write_dataset(const testutil::TempDir& dir, const Dataset& d,
                          const std::string& name = "data.tsv") {
  std::ofstream out(dir.path() / name);
  save_triplets(out, d);
  return (dir.path() / name).string();
}

}  // namespace

TEST_CASE("stats writes csv, json, and a manifest") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(16, 12, 0.65, 80);
  const std::string data = write_dataset(tmp, d);
  const std::string out = (tmp.path() / "run").string();

  REQUIRE(run({"stats", "--data", data, "--out", out}) == 0);

  const auto csv = lines_of(slurp(tmp.path() / "run" / "stats.csv"));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "#users,#items,#trns,rsize,csize,density,ratings");
  CHECK(split_csv(csv[1])[0] == "16");

  const json stats = slurp_json(tmp.path() / "run" / "stats.json");
  CHECK(stats["#users"] == 16);
  CHECK(stats["#items"] == 12);
  CHECK(stats["#trns"] == d.matrix.num_entries());

  const json manifest = slurp_json(tmp.path() / "run" / "manifest.json");
  CHECK(manifest["command"] == "stats");
  CHECK(manifest["data"]["transactions"] == d.matrix.num_entries());
  const std::string checksum = manifest["data"]["checksum"];
  CHECK(checksum.rfind("fnv1a64:", 0) == 0);
  CHECK(checksum.size() == 8 + 16);
}

TEST_CASE("complete writes report, id map, recovered entries, and lists") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(6, 5, 0.6, 81);
  const std::string data = write_dataset(tmp, d);
  const std::string out = (tmp.path() / "run").string();

  REQUIRE(run({"complete", "--data", data, "--out", out, "--gamma", "1.3",
               "--max-iter", "2000", "--trace", "--dump", "--lists", "3"}) == 0);

  const json report = slurp_json(tmp.path() / "run" / "report.json");
  CHECK(report["users"] == 6);
  CHECK(report["items"] == 5);
  CHECK(report["config"]["gamma"] == 1.3);
  CHECK(report["converged"] == true);
  CHECK(report["final_residual"].get<double>() <= 1e-4);
  CHECK(report["reconstruction"]["mean_preserved"].get<double>() > 0.0);

  const json id_map = slurp_json(tmp.path() / "run" / "id_map.json");
  REQUIRE(id_map["users"].size() == 6);
  CHECK(id_map["users"][0] == 100);
  CHECK(id_map["items"][4] == 504);

  // Every dumped entry is a previously-unobserved cell, in raw ids.
  const auto dump = lines_of(slurp(tmp.path() / "run" / "completed.csv"));
  REQUIRE(dump.size() >= 1);
  CHECK(dump[0] == "user_id,item_id,value");
  for (std::size_t i = 1; i < dump.size(); ++i) {
    const auto fields = split_csv(dump[i]);
    REQUIRE(fields.size() == 3);
    const int u = std::stoi(fields[0]) - 100;
    const int j = std::stoi(fields[1]) - 500;
    CHECK(!d.matrix.has(u, j));
    CHECK(std::stod(fields[2]) > 0.0);
  }

  const auto lists = lines_of(slurp(tmp.path() / "run" / "lists.csv"));
  CHECK(lists[0] == "user_id,rank,item_id,score");

  // One valid JSON object per iteration.
  const auto trace = lines_of(slurp(tmp.path() / "run" / "trace.jsonl"));
  CHECK(int(trace.size()) == report["iterations"].get<int>());
  for (const std::string& line : trace) {
    const json rec = json::parse(line);
    CHECK(rec.contains("mu"));
    CHECK(rec.contains("residual"));
  }

  const json manifest = slurp_json(tmp.path() / "run" / "manifest.json");
  const auto& outputs = manifest["outputs"];
  CHECK(std::find(outputs.begin(), outputs.end(), "completed.csv") !=
        outputs.end());
  CHECK(std::find(outputs.begin(), outputs.end(), "trace.jsonl") !=
        outputs.end());
}

TEST_CASE("invalid invocations exit nonzero") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(6, 5, 0.7, 82);
  const std::string data = write_dataset(tmp, d);
  const std::string out = (tmp.path() / "run").string();

  CHECK(run({"complete", "--data", data, "--out", out, "--gamma", "0.9"}) != 0);
  CHECK(run({"stats", "--data", (tmp.path() / "missing.tsv").string()}) != 0);
  CHECK(run({"evaluate", "--data", data, "--out", out, "--method", "bogus"}) !=
        0);
  CHECK(run({"evaluate", "--data", data, "--method", "puresvd"}) != 0);
  CHECK(run({"sweep", "--data", data, "--out", out}) != 0);
  CHECK(run({"sweep", "--data", data, "--out", out, "--method", "puresvd",
             "--mu0-grid", "0.1,1"}) != 0);
}

TEST_CASE("evaluate writes metrics and repeats bit-for-bit on the same seed") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(16, 12, 0.65, 83);
  const std::string data = write_dataset(tmp, d);

  const auto evaluate = [&](const std::string& out) {
    return run({"evaluate", "--data", data, "--out",
                (tmp.path() / out).string(), "--method", "puresvd", "--rank",
                "3", "--folds", "3", "--N", "4", "--seed", "9"});
  };
  REQUIRE(evaluate("a") == 0);
  REQUIRE(evaluate("b") == 0);

  const json a = slurp_json(tmp.path() / "a" / "eval.json");
  const json b = slurp_json(tmp.path() / "b" / "eval.json");
  CHECK(a["mean_hr"].get<double>() >= 0.0);
  CHECK(a["mean_hr"].get<double>() <= 1.0);
  CHECK(a["mean_arhr"].get<double>() <= a["mean_hr"].get<double>());
  REQUIRE(a["per_fold"].size() == 3);
  int users = 0;
  for (const auto& fold : a["per_fold"]) users += fold["n_users"].get<int>();
  CHECK(users == a["n_users_evaluated"].get<int>());

  // Scores and fold draws are deterministic; wall time may differ.
  CHECK(a["mean_hr"] == b["mean_hr"]);
  CHECK(a["mean_arhr"] == b["mean_arhr"]);
  for (std::size_t f = 0; f < 3; ++f) {
    CHECK(a["per_fold"][f]["hr"] == b["per_fold"][f]["hr"]);
    CHECK(a["per_fold"][f]["arhr"] == b["per_fold"][f]["arhr"]);
  }

  const auto csv = lines_of(slurp(tmp.path() / "a" / "eval.csv"));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "method,params,HR,ARHR");
  CHECK(csv[1].rfind("puresvd,rank=3,", 0) == 0);
}

TEST_CASE("flags override config file values which override presets") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(6, 5, 0.7, 84);
  const std::string data = write_dataset(tmp, d);
  testutil::write_file(tmp.path() / "cfg.json", "{\"gamma\": 1.7}\n");
  const std::string cfg = (tmp.path() / "cfg.json").string();

  const auto gamma_of = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = {"complete", "--data", data, "--out",
                                     (tmp.path() / "run").string(),
                                     "--max-iter", "50"};
    args.insert(args.end(), extra.begin(), extra.end());
    REQUIRE(run(args) == 0);
    const json report = slurp_json(tmp.path() / "run" / "report.json");
    return std::pair<double, double>(report["config"]["mu0"].get<double>(),
                                     report["config"]["gamma"].get<double>());
  };

  // Preset alone supplies both values.
  auto [mu0, gamma] = gamma_of({"--preset", "ml100k"});
  CHECK(mu0 == 6e-3);
  CHECK(gamma == 2.5);
  // Config file overrides the preset's gamma but leaves mu0 alone.
  std::tie(mu0, gamma) = gamma_of({"--preset", "ml100k", "--config", cfg});
  CHECK(mu0 == 6e-3);
  CHECK(gamma == 1.7);
  // An explicit flag wins over both.
  std::tie(mu0, gamma) =
      gamma_of({"--preset", "ml100k", "--config", cfg, "--gamma", "1.9"});
  CHECK(mu0 == 6e-3);
  CHECK(gamma == 1.9);

  // Unknown preset and unknown config keys are rejected.
  CHECK(run({"complete", "--data", data, "--out",
             (tmp.path() / "run").string(), "--preset", "nope"}) != 0);
  testutil::write_file(tmp.path() / "bad.json", "{\"bogus\": 1}\n");
  CHECK(run({"complete", "--data", data, "--out",
             (tmp.path() / "run").string(), "--config",
             (tmp.path() / "bad.json").string()}) != 0);
}

TEST_CASE("sweep over list lengths yields nondecreasing hit rate") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(16, 12, 0.65, 85);
  const std::string data = write_dataset(tmp, d);
  const std::string out = (tmp.path() / "run").string();

  REQUIRE(run({"sweep", "--data", data, "--out", out, "--method", "itemknn",
               "--k", "4", "--N-grid", "2,4,8", "--folds", "2", "--seed",
               "3"}) == 0);

  const auto rows = lines_of(slurp(tmp.path() / "run" / "sweep.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "method,mu0,gamma,rank,k,N,folds,seed,hr,arhr,iterations,"
        "wall_time_seconds");
  double prev_hr = -1.0;
  const std::vector<std::string> expected_n = {"2", "4", "8"};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto fields = split_csv(rows[i]);
    REQUIRE(fields.size() == 12);
    CHECK(fields[0] == "itemknn");
    CHECK(fields[4] == "4");
    CHECK(fields[5] == expected_n[i - 1]);
    const double hr = std::stod(fields[8]);
    CHECK(hr >= prev_hr);
    prev_hr = hr;
  }
}

TEST_CASE("sweep over gamma shows fewer iterations for faster schedules") {
  testutil::TempDir tmp("cli");
  const Dataset d = make_dataset(14, 10, 0.6, 86);
  const std::string data = write_dataset(tmp, d);
  const std::string out = (tmp.path() / "run").string();

  REQUIRE(run({"sweep", "--data", data, "--out", out, "--gamma-grid",
               "1.1,1.5,2.0", "--folds", "2", "--N", "3", "--seed", "4"}) == 0);

  const auto rows = lines_of(slurp(tmp.path() / "run" / "sweep.csv"));
  REQUIRE(rows.size() == 4);
  double prev_iters = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto fields = split_csv(rows[i]);
    CHECK(fields[0] == "logdet");
    const double iters = std::stod(fields[10]);
    CHECK(iters < prev_iters);
    prev_iters = iters;
  }
}
