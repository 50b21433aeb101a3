#include "rankfill/eval.hpp"

#include <chrono>
#include <stdexcept>

#include "rankfill/folds.hpp"
#include "rankfill/metrics.hpp"
#include "rankfill/parallel.hpp"
#include "rankfill/recommend.hpp"

namespace rankfill {

std::map<std::string, double> LogdetCompletionScorer::params() const {
  return {{"mu0", cfg_.mu0},
          {"gamma", cfg_.gamma},
          {"tol", cfg_.tol},
          {"max_iter", static_cast<double>(cfg_.max_iter)}};
}

ScoreResult LogdetCompletionScorer::score(const RatingMatrix& train) const {
  const CompletionResult completed = complete(train, cfg_);
  ScoreResult out;
  out.scores = completed.x_hat;
  out.diag.iterations = completed.report.iterations;
  out.diag.converged = completed.report.converged;
  out.diag.wall_time_seconds = completed.report.wall_time_seconds;
  return out;
}

std::map<std::string, double> PureSvdScorer::params() const {
  return {{"rank", static_cast<double>(rank_)}};
}

ScoreResult PureSvdScorer::score(const RatingMatrix& train) const {
  const auto start = std::chrono::steady_clock::now();
  ScoreResult out;
  out.scores = puresvd_scores(train, rank_);
  out.diag.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::map<std::string, double> ItemKnnScorer::params() const {
  return {{"k", static_cast<double>(k_)}};
}

ScoreResult ItemKnnScorer::score(const RatingMatrix& train) const {
  const auto start = std::chrono::steady_clock::now();
  ScoreResult out;
  out.scores = itemknn_scores(train, k_);
  out.diag.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

EvalReport run_cv(const RatingMatrix& m, const Scorer& scorer,
                  const CvOptions& opts) {
  if (opts.n_list < 1) {
    throw std::invalid_argument("n_list must be positive");
  }
  const auto folds = make_folds(m, opts.folds, opts.seed);

  EvalReport report;
  report.per_fold.resize(folds.size());
  parallel_for(static_cast<int>(folds.size()), opts.jobs, [&](int f) {
    const FoldSplit& fold = folds[static_cast<std::size_t>(f)];
    if (fold.test.empty()) {
      throw std::runtime_error("fold " + std::to_string(f) +
                               " has no testable users");
    }
    const ScoreResult scored = scorer.score(fold.train);
    const auto lists = top_n_all(scored.scores, fold.train, opts.n_list);
    FoldMetrics fm;
    fm.hr = hit_rate(lists, fold.test);
    fm.arhr = arhr(lists, fold.test);
    fm.n_list = opts.n_list;
    fm.n_users = static_cast<int>(fold.test.size());
    fm.diag = scored.diag;
    report.per_fold[static_cast<std::size_t>(f)] = fm;
  });

  for (const FoldMetrics& fm : report.per_fold) {
    report.mean_hr += fm.hr;
    report.mean_arhr += fm.arhr;
    report.n_users_evaluated += fm.n_users;
  }
  report.mean_hr /= static_cast<double>(report.per_fold.size());
  report.mean_arhr /= static_cast<double>(report.per_fold.size());
  return report;
}

}  // namespace rankfill
