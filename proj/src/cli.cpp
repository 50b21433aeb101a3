#include "rankfill/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rankfill/baselines.hpp"
#include "rankfill/eval.hpp"
#include "rankfill/folds.hpp"
#include "rankfill/metrics.hpp"
#include "rankfill/presets.hpp"
#include "rankfill/rating_matrix.hpp"
#include "rankfill/recommend.hpp"
#include "rankfill/solver.hpp"
#include "rankfill/triplets.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace rankfill {

namespace {

constexpr const char* kVersion = "0.1.0";

// --- small utilities --------------------------------------------------------

std::uint64_t fnv1a64(const char* data, std::size_t n,
                      std::uint64_t h = 14695981039346656037ULL) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string file_checksum(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  char buf[1 << 16];
  std::uint64_t h = 14695981039346656037ULL;
  while (in) {
    in.read(buf, sizeof(buf));
    h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
  }
  std::ostringstream hex;
  hex << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

// Full content lands under the final name or not at all.
void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) {
      throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, path);
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out << std::setprecision(15) << v;
  return out.str();
}

TripletFormat parse_format(const std::string& name) {
  if (name == "tsv-rating") return TripletFormat::kTsvRating;
  if (name == "tsv-binary") return TripletFormat::kTsvBinary;
  throw std::runtime_error("unknown format '" + name + "'");
}

// --- settings resolution -----------------------------------------------------

// One flat bag of values for every subcommand; CLI11 binds into this, and the
// option handles let us tell "explicitly set" apart from "left at default"
// when layering flags > config file > preset.
struct CliValues {
  std::string data;
  std::string format = "tsv-rating";
  std::string method = "logdet";
  std::string preset;
  std::string config;
  std::string out;
  double mu0 = 1e-3;
  double gamma = 1.1;
  double tol = 1e-4;
  int max_iter = 300;
  int rank = 10;
  int k = 10;
  int n_list = 10;
  int folds = 5;
  std::uint64_t seed = 42;
  int jobs = 1;
  bool trace = false;
  bool dump = false;
  bool as_json = false;
  int lists = 0;
  std::vector<double> mu0_grid;
  std::vector<double> gamma_grid;
  std::vector<int> n_grid;
};

// Each subcommand registers its own instance of a shared flag; only the
// parsed subcommand's instance can have a nonzero count.
struct OptionHandles {
  std::map<std::string, std::vector<CLI::Option*>> by_name;

  CLI::Option* track(const std::string& name, CLI::Option* opt) {
    by_name[name].push_back(opt);
    return opt;
  }
  bool given(const std::string& name) const {
    const auto it = by_name.find(name);
    if (it == by_name.end()) return false;
    for (const CLI::Option* opt : it->second) {
      if (opt->count() > 0) return true;
    }
    return false;
  }
};

// Resolved settings after applying precedence.
struct Settings {
  std::string data;
  std::string format = "tsv-rating";
  std::string method = "logdet";
  std::string out;
  double mu0 = 1e-3;
  double gamma = 1.1;
  double tol = 1e-4;
  int max_iter = 300;
  int rank = 10;
  int k = 10;
  int n_list = 10;
  int folds = 5;
  std::uint64_t seed = 42;
  int jobs = 1;
  bool trace = false;
  bool dump = false;
  bool as_json = false;
  int lists = 0;
};

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config '" + path + "'");
  }
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw std::runtime_error("config '" + path + "': " + e.what());
  }
  if (!cfg.is_object()) {
    throw std::runtime_error("config '" + path + "' must be a JSON object");
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "format") s.format = value.get<std::string>();
    else if (key == "method") s.method = value.get<std::string>();
    else if (key == "mu0") s.mu0 = value.get<double>();
    else if (key == "gamma") s.gamma = value.get<double>();
    else if (key == "tol") s.tol = value.get<double>();
    else if (key == "max_iter") s.max_iter = value.get<int>();
    else if (key == "rank") s.rank = value.get<int>();
    else if (key == "k") s.k = value.get<int>();
    else if (key == "N") s.n_list = value.get<int>();
    else if (key == "folds") s.folds = value.get<int>();
    else if (key == "seed") s.seed = value.get<std::uint64_t>();
    else if (key == "jobs") s.jobs = value.get<int>();
    else throw std::runtime_error("config '" + path + "': unknown key '" + key + "'");
  }
}

Settings resolve(const CliValues& v, const OptionHandles& opts) {
  Settings s;
  // Lowest layer: dataset preset.
  if (!v.preset.empty()) {
    const auto p = find_preset(v.preset);
    if (!p) {
      throw std::runtime_error("unknown preset '" + v.preset + "'");
    }
    s.mu0 = p->mu0;
    s.gamma = p->gamma;
    s.rank = p->puresvd_rank;
    s.k = p->itemknn_k;
  }
  // Middle layer: config file.
  if (!v.config.empty()) apply_config_file(s, v.config);
  // Top layer: explicit flags.
  if (opts.given("--format")) s.format = v.format;
  if (opts.given("--method")) s.method = v.method;
  if (opts.given("--mu0")) s.mu0 = v.mu0;
  if (opts.given("--gamma")) s.gamma = v.gamma;
  if (opts.given("--tol")) s.tol = v.tol;
  if (opts.given("--max-iter")) s.max_iter = v.max_iter;
  if (opts.given("--rank")) s.rank = v.rank;
  if (opts.given("--k")) s.k = v.k;
  if (opts.given("--N")) s.n_list = v.n_list;
  if (opts.given("--folds")) s.folds = v.folds;
  if (opts.given("--seed")) s.seed = v.seed;
  if (opts.given("--jobs")) s.jobs = v.jobs;
  s.data = v.data;
  s.out = v.out;
  s.trace = v.trace;
  s.dump = v.dump;
  s.as_json = v.as_json;
  s.lists = v.lists;
  return s;
}

SolverConfig solver_config(const Settings& s) {
  SolverConfig cfg;
  cfg.mu0 = s.mu0;
  cfg.gamma = s.gamma;
  cfg.tol = s.tol;
  cfg.max_iter = s.max_iter;
  cfg.validate();
  return cfg;
}

std::unique_ptr<Scorer> make_scorer(const Settings& s) {
  if (s.method == "logdet") {
    return std::make_unique<LogdetCompletionScorer>(solver_config(s));
  }
  if (s.method == "puresvd") {
    return std::make_unique<PureSvdScorer>(s.rank);
  }
  if (s.method == "itemknn") {
    return std::make_unique<ItemKnnScorer>(s.k);
  }
  throw std::runtime_error("unknown method '" + s.method + "'");
}

// --- shared output pieces ----------------------------------------------------

json dataset_manifest(const Settings& s, const Dataset& d) {
  return {{"path", s.data},
          {"checksum", file_checksum(s.data)},
          {"users", d.matrix.num_users()},
          {"items", d.matrix.num_items()},
          {"transactions", d.matrix.num_entries()}};
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const json& config, const json& data,
                    const std::vector<std::string>& outputs) {
  json manifest = {{"version", kVersion},
                   {"command", command},
                   {"config", config},
                   {"data", data},
                   {"outputs", outputs}};
  write_file_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
}

fs::path prepare_out_dir(const Settings& s) {
  if (s.out.empty()) {
    throw std::runtime_error("--out directory is required for this command");
  }
  fs::create_directories(s.out);
  return fs::path(s.out);
}

json eval_report_json(const Settings& s, const EvalReport& report) {
  json per_fold = json::array();
  for (std::size_t f = 0; f < report.per_fold.size(); ++f) {
    const FoldMetrics& fm = report.per_fold[f];
    per_fold.push_back({{"fold", f},
                        {"hr", fm.hr},
                        {"arhr", fm.arhr},
                        {"n_users", fm.n_users},
                        {"iterations", fm.diag.iterations},
                        {"converged", fm.diag.converged},
                        {"wall_time_seconds", fm.diag.wall_time_seconds}});
  }
  return {{"method", s.method},
          {"n_list", s.n_list},
          {"folds", s.folds},
          {"seed", s.seed},
          {"per_fold", per_fold},
          {"mean_hr", report.mean_hr},
          {"mean_arhr", report.mean_arhr},
          {"n_users_evaluated", report.n_users_evaluated}};
}

std::string method_params(const Settings& s) {
  if (s.method == "logdet") {
    return "mu0=" + fmt_double(s.mu0) + ";gamma=" + fmt_double(s.gamma) +
           ";tol=" + fmt_double(s.tol) +
           ";max_iter=" + std::to_string(s.max_iter);
  }
  if (s.method == "puresvd") return "rank=" + std::to_string(s.rank);
  return "k=" + std::to_string(s.k);
}

// Table-shaped row: method, params, HR, ARHR.
std::string eval_csv(const Settings& s, const EvalReport& report) {
  std::ostringstream out;
  out << "method,params,HR,ARHR\n"
      << s.method << ',' << method_params(s) << ',' << fmt_double(report.mean_hr)
      << ',' << fmt_double(report.mean_arhr) << '\n';
  return out.str();
}

// --- commands ----------------------------------------------------------------

int cmd_stats(const Settings& s) {
  const Dataset d = load_triplets_file(s.data, parse_format(s.format));
  const DatasetMeta meta = dataset_stats(d.matrix);

  std::ostringstream csv;
  csv << "#users,#items,#trns,rsize,csize,density,ratings\n"
      << meta.users << ',' << meta.items << ',' << meta.transactions << ','
      << std::fixed << std::setprecision(2) << meta.rsize << ',' << meta.csize
      << ',' << meta.density * 100.0 << '%' << ',';
  if (meta.rating_range && meta.rating_range->first != meta.rating_range->second) {
    csv << fmt_double(meta.rating_range->first) << '-'
        << fmt_double(meta.rating_range->second);
  } else {
    csv << '-';
  }
  csv << '\n';

  json j = {{"#users", meta.users},
            {"#items", meta.items},
            {"#trns", meta.transactions},
            {"rsize", meta.rsize},
            {"csize", meta.csize},
            {"density", meta.density}};
  if (meta.rating_range && meta.rating_range->first != meta.rating_range->second) {
    j["ratings"] = {meta.rating_range->first, meta.rating_range->second};
  } else {
    j["ratings"] = nullptr;
  }

  if (s.as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << csv.str();
  }
  if (!s.out.empty()) {
    const fs::path dir = prepare_out_dir(s);
    write_file_atomic(dir / "stats.csv", csv.str());
    write_file_atomic(dir / "stats.json", j.dump(2) + "\n");
    write_manifest(dir, "stats",
                   {{"data", s.data}, {"format", s.format}},
                   dataset_manifest(s, d), {"stats.csv", "stats.json"});
  }
  return 0;
}

int cmd_complete(const Settings& s) {
  const Dataset d = load_triplets_file(s.data, parse_format(s.format));
  const SolverConfig cfg = solver_config(s);
  const fs::path dir = prepare_out_dir(s);

  std::optional<std::ofstream> trace;
  if (s.trace) {
    trace.emplace(dir / "trace.jsonl");
    if (!*trace) {
      throw std::runtime_error("cannot write trace file");
    }
  }
  const CompletionResult result =
      complete(d.matrix, cfg, {}, trace ? &*trace : nullptr);
  if (trace) trace->close();

  const ReconStats recon = reconstruction_stats(result.x_hat, d.matrix);
  json report = {
      {"users", d.matrix.num_users()},
      {"items", d.matrix.num_items()},
      {"config",
       {{"mu0", cfg.mu0},
        {"gamma", cfg.gamma},
        {"tol", cfg.tol},
        {"max_iter", cfg.max_iter}}},
      {"iterations", result.report.iterations},
      {"converged", result.report.converged},
      {"final_residual", result.report.final_residual},
      {"final_rank", result.report.final_rank},
      {"wall_time_seconds", result.report.wall_time_seconds},
      {"objective", result.report.objective_trace.empty()
                        ? 0.0
                        : result.report.objective_trace.back()},
      {"reconstruction",
       {{"recovered_density", recon.recovered_density},
        {"mean_recovered", recon.mean_recovered},
        {"mean_preserved", recon.mean_preserved}}}};
  write_file_atomic(dir / "report.json", report.dump(2) + "\n");

  json id_map = {{"users", d.user_ids}, {"items", d.item_ids}};
  write_file_atomic(dir / "id_map.json", id_map.dump() + "\n");

  std::vector<std::string> outputs = {"report.json", "id_map.json"};
  if (s.trace) outputs.push_back("trace.jsonl");

  if (s.dump) {
    // Recovered entries only; observed ones are in the input already.
    std::ostringstream dump;
    dump << "user_id,item_id,value\n";
    for (int u = 0; u < d.matrix.num_users(); ++u) {
      for (int j = 0; j < d.matrix.num_items(); ++j) {
        if (result.x_hat(u, j) > 1e-8 && !d.matrix.has(u, j)) {
          dump << d.user_ids[static_cast<std::size_t>(u)] << ','
               << d.item_ids[static_cast<std::size_t>(j)] << ','
               << fmt_double(result.x_hat(u, j)) << '\n';
        }
      }
    }
    write_file_atomic(dir / "completed.csv", dump.str());
    outputs.push_back("completed.csv");
  }

  if (s.lists > 0) {
    const auto lists = top_n_all(result.x_hat, d.matrix, s.lists);
    std::ostringstream csv;
    write_ranked_lists_csv(csv, lists, d.user_ids, d.item_ids);
    write_file_atomic(dir / "lists.csv", csv.str());
    outputs.push_back("lists.csv");
  }

  write_manifest(dir, "complete", report["config"], dataset_manifest(s, d),
                 outputs);

  std::cout << "completed " << d.matrix.num_users() << "x"
            << d.matrix.num_items() << " in " << result.report.iterations
            << " iterations ("
            << (result.report.converged ? "converged" : "not converged")
            << ", residual " << result.report.final_residual << ", rank "
            << result.report.final_rank << ", "
            << std::setprecision(3) << result.report.wall_time_seconds
            << " s)\n";
  return 0;
}

int cmd_evaluate(const Settings& s) {
  const Dataset d = load_triplets_file(s.data, parse_format(s.format));
  const auto scorer = make_scorer(s);
  CvOptions opts;
  opts.n_list = s.n_list;
  opts.folds = s.folds;
  opts.seed = s.seed;
  opts.jobs = s.jobs;
  const EvalReport report = run_cv(d.matrix, *scorer, opts);

  const fs::path dir = prepare_out_dir(s);
  write_file_atomic(dir / "eval.json",
                    eval_report_json(s, report).dump(2) + "\n");
  write_file_atomic(dir / "eval.csv", eval_csv(s, report));
  json config = {{"method", s.method}, {"params", method_params(s)},
                 {"N", s.n_list},      {"folds", s.folds},
                 {"seed", s.seed},     {"jobs", s.jobs}};
  write_manifest(dir, "evaluate", config, dataset_manifest(s, d),
                 {"eval.json", "eval.csv"});

  std::cout << s.method << " HR@" << s.n_list << " = "
            << fmt_double(report.mean_hr) << ", ARHR = "
            << fmt_double(report.mean_arhr) << " (" << s.folds << " folds, "
            << report.n_users_evaluated << " user tests)\n";
  return 0;
}

struct GridPoint {
  double mu0 = 0.0;
  double gamma = 0.0;
  int n_list = 0;
};

int cmd_sweep(const Settings& s, const CliValues& v) {
  if (v.mu0_grid.empty() && v.gamma_grid.empty() && v.n_grid.empty()) {
    throw CLI::ValidationError(
        "sweep", "at least one of --mu0-grid, --gamma-grid, --N-grid is required");
  }
  if (s.method != "logdet" && !(v.mu0_grid.empty() && v.gamma_grid.empty())) {
    throw CLI::ValidationError(
        "sweep", "--mu0-grid/--gamma-grid apply to --method logdet only");
  }
  const std::vector<double> mu0s =
      v.mu0_grid.empty() ? std::vector<double>{s.mu0} : v.mu0_grid;
  const std::vector<double> gammas =
      v.gamma_grid.empty() ? std::vector<double>{s.gamma} : v.gamma_grid;
  const std::vector<int> ns =
      v.n_grid.empty() ? std::vector<int>{s.n_list} : v.n_grid;

  const Dataset d = load_triplets_file(s.data, parse_format(s.format));
  const fs::path dir = prepare_out_dir(s);

  // Rows are flushed as soon as they are computed so an aborted sweep still
  // leaves the finished grid points on disk.
  std::ofstream csv(dir / "sweep.csv");
  if (!csv) {
    throw std::runtime_error("cannot write sweep.csv");
  }
  csv << "method,mu0,gamma,rank,k,N,folds,seed,hr,arhr,iterations,"
         "wall_time_seconds\n"
      << std::flush;

  const auto folds = make_folds(d.matrix, s.folds, s.seed);
  const int n_max = *std::max_element(ns.begin(), ns.end());
  std::size_t rows = 0;
  for (const double mu0 : mu0s) {
    for (const double gamma : gammas) {
      // One scoring pass per (mu0, gamma); every N reuses the same ranking,
      // truncated to its prefix.
      Settings point = s;
      point.mu0 = mu0;
      point.gamma = gamma;
      const auto scorer = make_scorer(point);

      std::vector<std::vector<HitRecord>> fold_hits(folds.size());
      std::vector<int> fold_users(folds.size());
      double iterations = 0.0;
      double wall_time = 0.0;
      for (std::size_t f = 0; f < folds.size(); ++f) {
        const FoldSplit& fold = folds[f];
        if (fold.test.empty()) {
          throw std::runtime_error("fold " + std::to_string(f) +
                                   " has no testable users");
        }
        const ScoreResult scored = scorer->score(fold.train);
        const auto lists = top_n_all(scored.scores, fold.train, n_max);
        fold_hits[f] = collect_hits(lists, fold.test);
        fold_users[f] = static_cast<int>(fold.test.size());
        iterations += scored.diag.iterations;
        wall_time += scored.diag.wall_time_seconds;
      }
      iterations /= static_cast<double>(folds.size());

      for (const int n : ns) {
        double hr = 0.0;
        double arhr_val = 0.0;
        for (std::size_t f = 0; f < folds.size(); ++f) {
          int hits = 0;
          double recip = 0.0;
          for (const HitRecord& hit : fold_hits[f]) {
            if (hit.position <= n) {
              ++hits;
              recip += 1.0 / hit.position;
            }
          }
          hr += static_cast<double>(hits) / fold_users[f];
          arhr_val += recip / fold_users[f];
        }
        hr /= static_cast<double>(folds.size());
        arhr_val /= static_cast<double>(folds.size());

        csv << s.method << ',';
        if (s.method == "logdet") {
          csv << fmt_double(mu0) << ',' << fmt_double(gamma) << ",,";
        } else if (s.method == "puresvd") {
          csv << ",," << s.rank << ',';
        } else {
          csv << ",,," << s.k;
        }
        csv << ',' << n << ',' << s.folds << ',' << s.seed << ','
            << fmt_double(hr) << ',' << fmt_double(arhr_val) << ','
            << fmt_double(iterations) << ',' << fmt_double(wall_time) << '\n'
            << std::flush;
        ++rows;
      }
    }
  }
  csv.close();

  json config = {{"method", s.method},
                 {"mu0_grid", mu0s},
                 {"gamma_grid", gammas},
                 {"N_grid", ns},
                 {"folds", s.folds},
                 {"seed", s.seed},
                 {"jobs", s.jobs}};
  if (s.method == "puresvd") config["rank"] = s.rank;
  if (s.method == "itemknn") config["k"] = s.k;
  write_manifest(dir, "sweep", config, dataset_manifest(s, d), {"sweep.csv"});

  std::cout << "sweep wrote " << rows << " rows to "
            << (dir / "sweep.csv").string() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CliValues v;
  OptionHandles handles;
  CLI::App app{"Low-rank matrix completion for Top-N recommendation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const auto add_data = [&](CLI::App* sub) {
    handles.track("--data",
                  sub->add_option("--data", v.data, "triplet file")->required());
    handles.track("--format",
                  sub->add_option("--format", v.format,
                                  "file format: tsv-rating or tsv-binary")
                      ->check(CLI::IsMember({"tsv-rating", "tsv-binary"})));
  };
  const auto add_layers = [&](CLI::App* sub) {
    sub->add_option("--preset", v.preset,
                    "dataset preset supplying default parameters");
    sub->add_option("--config", v.config, "JSON config file");
  };
  const auto add_solver = [&](CLI::App* sub) {
    handles.track("--mu0", sub->add_option("--mu0", v.mu0, "initial penalty"));
    handles.track("--gamma",
                  sub->add_option("--gamma", v.gamma, "penalty growth factor"));
    handles.track("--tol", sub->add_option("--tol", v.tol, "stopping tolerance"));
    handles.track("--max-iter",
                  sub->add_option("--max-iter", v.max_iter, "iteration cap"));
  };
  const auto add_method = [&](CLI::App* sub) {
    handles.track("--method",
                  sub->add_option("--method", v.method, "scoring method")
                      ->check(CLI::IsMember({"logdet", "puresvd", "itemknn"})));
    handles.track("--rank",
                  sub->add_option("--rank", v.rank, "puresvd rank"));
    handles.track("--k", sub->add_option("--k", v.k, "itemknn neighbors"));
  };
  const auto add_cv = [&](CLI::App* sub) {
    handles.track("--N", sub->add_option("--N", v.n_list, "list length"));
    handles.track("--folds", sub->add_option("--folds", v.folds, "fold count"));
    handles.track("--seed", sub->add_option("--seed", v.seed, "RNG seed"));
    handles.track("--jobs",
                  sub->add_option("--jobs", v.jobs, "concurrent folds"));
  };

  CLI::App* stats = app.add_subcommand("stats", "dataset summary");
  add_data(stats);
  stats->add_option("--out", v.out, "output directory");
  stats->add_flag("--json", v.as_json, "print JSON instead of CSV");

  CLI::App* complete_cmd =
      app.add_subcommand("complete", "fill the matrix once");
  add_data(complete_cmd);
  add_layers(complete_cmd);
  add_solver(complete_cmd);
  complete_cmd->add_option("--out", v.out, "output directory")->required();
  complete_cmd->add_flag("--trace", v.trace, "write per-iteration trace");
  complete_cmd->add_flag("--dump", v.dump, "dump recovered entries as CSV");
  complete_cmd->add_option("--lists", v.lists,
                           "also write Top-N lists of this length");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "cross-validated HR/ARHR");
  add_data(evaluate);
  add_layers(evaluate);
  add_method(evaluate);
  add_solver(evaluate);
  add_cv(evaluate);
  evaluate->add_option("--out", v.out, "output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "parameter grid evaluation");
  add_data(sweep);
  add_layers(sweep);
  add_method(sweep);
  add_solver(sweep);
  add_cv(sweep);
  sweep->add_option("--mu0-grid", v.mu0_grid, "mu0 values")->delimiter(',');
  sweep->add_option("--gamma-grid", v.gamma_grid, "gamma values")
      ->delimiter(',');
  sweep->add_option("--N-grid", v.n_grid, "list lengths")->delimiter(',');
  sweep->add_option("--out", v.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Settings s = resolve(v, handles);
    if (stats->parsed()) return cmd_stats(s);
    if (complete_cmd->parsed()) return cmd_complete(s);
    if (evaluate->parsed()) return cmd_evaluate(s);
    return cmd_sweep(s, v);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rankfill
