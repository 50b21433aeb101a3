#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rankfill/baselines.hpp"
#include "rankfill/rating_matrix.hpp"
#include "rankfill/solver.hpp"

namespace rankfill {

struct ScoreDiagnostics {
  int iterations = 0;      // 0 for closed-form scorers
  bool converged = true;
  double wall_time_seconds = 0.0;
};

struct ScoreResult {
  Eigen::MatrixXd scores;
  ScoreDiagnostics diag;
};

// A model that turns a training matrix into a full score matrix.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string name() const = 0;
  virtual std::map<std::string, double> params() const = 0;
  virtual ScoreResult score(const RatingMatrix& train) const = 0;
};

class LogdetCompletionScorer : public Scorer {
 public:
  explicit LogdetCompletionScorer(SolverConfig cfg) : cfg_(cfg) {}
  std::string name() const override { return "logdet"; }
  std::map<std::string, double> params() const override;
  ScoreResult score(const RatingMatrix& train) const override;

 private:
  SolverConfig cfg_;
};

class PureSvdScorer : public Scorer {
 public:
  explicit PureSvdScorer(int rank) : rank_(rank) {}
  std::string name() const override { return "puresvd"; }
  std::map<std::string, double> params() const override;
  ScoreResult score(const RatingMatrix& train) const override;

 private:
  int rank_;
};

class ItemKnnScorer : public Scorer {
 public:
  explicit ItemKnnScorer(int k) : k_(k) {}
  std::string name() const override { return "itemknn"; }
  std::map<std::string, double> params() const override;
  ScoreResult score(const RatingMatrix& train) const override;

 private:
  int k_;
};

struct FoldMetrics {
  double hr = 0.0;
  double arhr = 0.0;
  int n_list = 0;
  int n_users = 0;  // users actually tested in this fold
  ScoreDiagnostics diag;
};

struct EvalReport {
  std::vector<FoldMetrics> per_fold;
  double mean_hr = 0.0;
  double mean_arhr = 0.0;
  int n_users_evaluated = 0;  // summed over folds
};

struct CvOptions {
  int n_list = 10;
  int folds = 5;
  std::uint64_t seed = 42;
  int jobs = 1;  // folds scored concurrently
};

// Leave-one-out cross-validation: per fold, hold out one rating per eligible
// user, score the rest, and rank. Fold splits depend only on (matrix, seed),
// so results are identical across jobs settings.
EvalReport run_cv(const RatingMatrix& m, const Scorer& scorer,
                  const CvOptions& opts = {});

}  // namespace rankfill
