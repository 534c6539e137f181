#pragma once

#include <array>
#include <string>
#include <vector>

#include "codemix/types.hpp"
#include "codemix/vectorizer.hpp"

namespace codemix {

struct LabeledExample {
  SparseVector features;
  Label label;
};

// Naive Bayes log-count ratios for one binary task.
struct RatioVector {
  std::vector<double> r;
  double alpha = 1.0;
};

struct LinearHead {
  std::vector<double> w;
  double b = 0.0;
  double C = 4.0;
};

struct NbSvmModel {
  std::array<RatioVector, kNumClasses> ratios;
  std::array<LinearHead, kNumClasses> heads;
  Vocabulary vocab;
  double alpha = 1.0;
  double C = 4.0;
  double beta = 1.0;
};

// r_j = log((p_j/|p|_1) / (q_j/|q|_1)) with p = alpha + sum of positive rows,
// q = alpha + sum of negative rows. X must be binarized.
RatioVector log_count_ratios(const std::vector<SparseVector>& X, const std::vector<int>& y,
                             double alpha);

// x' = x ∘ r on x's support; support is preserved even where r_j = 0.
SparseVector scale(const SparseVector& x, const RatioVector& ratios);

// Regularized logistic objective: 0.5*|w|^2 + C * sum_i log(1 + exp(-y_i f_i)),
// y_i in {-1,+1}, f_i = w.x_i + b. Bias unregularized.
double logistic_loss(const std::vector<SparseVector>& X, const std::vector<int>& y,
                     const std::vector<double>& w, double b, double C);
void logistic_gradient(const std::vector<SparseVector>& X, const std::vector<int>& y,
                       const std::vector<double>& w, double b, double C,
                       std::vector<double>& grad_w, double& grad_b);

struct TrainOptions {
  double tol = 1e-6;      // gradient inf-norm
  int max_iter = 1000;
  // Deterministic starting point; nonzero seeds derive a fixed pseudo-random
  // start (used by the two-start convergence check).
  unsigned start_seed = 0;
};

// Deterministic full-batch L-BFGS with backtracking line search.
LinearHead train_binary(const std::vector<SparseVector>& X, const std::vector<int>& y, double C,
                        const TrainOptions& opts = {});

NbSvmModel train(const std::vector<LabeledExample>& dataset, Vocabulary vocab, double alpha,
                 double C, double beta);

std::array<double, kNumClasses> predict_proba(const NbSvmModel& model, const SparseVector& x);
Label predict(const NbSvmModel& model, const SparseVector& x);

// Versioned TSV bundle; load+save round-trips predictions bit-exactly.
void save_model(const NbSvmModel& model, const std::string& path);
NbSvmModel load_model(const std::string& path);

}  // namespace codemix
