#include "codemix/nbsvm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace codemix {

namespace {

std::uint32_t common_dim(const std::vector<SparseVector>& X) {
  std::uint32_t dim = X.empty() ? 0 : X[0].dim;
  for (const auto& x : X) {
    if (x.dim != dim) throw std::invalid_argument("inconsistent feature dimensions");
  }
  return dim;
}

// log(1 + exp(-m)) without overflow
inline double log1p_exp_neg(double m) {
  if (m > 0) return std::log1p(std::exp(-m));
  return -m + std::log1p(std::exp(m));
}

inline double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

inline double dot(const SparseVector& x, const std::vector<double>& w) {
  double s = 0.0;
  for (const auto& [idx, v] : x.entries) s += v * w[idx];
  return s;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RatioVector log_count_ratios(const std::vector<SparseVector>& X, const std::vector<int>& y,
                             double alpha) {
  if (alpha <= 0) throw std::invalid_argument("log_count_ratios: alpha must be > 0");
  if (X.size() != y.size()) throw std::invalid_argument("log_count_ratios: size mismatch");
  const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
  const bool has_neg = std::find(y.begin(), y.end(), 0) != y.end();
  if (!has_pos || !has_neg) {
    throw std::invalid_argument("log_count_ratios: both classes must be present");
  }
  const std::uint32_t dim = common_dim(X);
  std::vector<double> p(dim, alpha), q(dim, alpha);
  for (std::size_t i = 0; i < X.size(); ++i) {
    auto& target = y[i] == 1 ? p : q;
    for (const auto& [idx, v] : X[i].entries) target[idx] += v;
  }
  double psum = 0.0, qsum = 0.0;
  for (double v : p) psum += v;
  for (double v : q) qsum += v;
  RatioVector out;
  out.alpha = alpha;
  out.r.resize(dim);
  for (std::uint32_t j = 0; j < dim; ++j) {
    out.r[j] = std::log(p[j] / psum) - std::log(q[j] / qsum);
  }
  return out;
}

SparseVector scale(const SparseVector& x, const RatioVector& ratios) {
  if (x.dim != ratios.r.size()) throw std::invalid_argument("scale: dimension mismatch");
  SparseVector out;
  out.dim = x.dim;
  out.entries.reserve(x.entries.size());
  for (const auto& [idx, v] : x.entries) out.entries.emplace_back(idx, v * ratios.r[idx]);
  return out;
}

double logistic_loss(const std::vector<SparseVector>& X, const std::vector<int>& y,
                     const std::vector<double>& w, double b, double C) {
  double loss = 0.0;
  for (double wj : w) loss += 0.5 * wj * wj;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double f = dot(X[i], w) + b;
    const double yi = y[i] == 1 ? 1.0 : -1.0;
    loss += C * log1p_exp_neg(yi * f);
  }
  return loss;
}

void logistic_gradient(const std::vector<SparseVector>& X, const std::vector<int>& y,
                       const std::vector<double>& w, double b, double C,
                       std::vector<double>& grad_w, double& grad_b) {
  grad_w.assign(w.size(), 0.0);
  for (std::size_t j = 0; j < w.size(); ++j) grad_w[j] = w[j];
  grad_b = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double f = dot(X[i], w) + b;
    const double yi = y[i] == 1 ? 1.0 : -1.0;
    const double g = -C * yi * sigmoid(-yi * f);
    for (const auto& [idx, v] : X[i].entries) grad_w[idx] += g * v;
    grad_b += g;
  }
}

LinearHead train_binary(const std::vector<SparseVector>& X, const std::vector<int>& y, double C,
                        const TrainOptions& opts) {
  if (C <= 0) throw std::invalid_argument("train_binary: C must be > 0");
  const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
  const bool has_neg = std::find(y.begin(), y.end(), 0) != y.end();
  if (!has_pos || !has_neg) {
    throw std::invalid_argument("train_binary: both classes must be present");
  }
  const std::uint32_t dim = common_dim(X);
  const std::size_t n = dim + 1;  // theta = [w..., b]

  std::vector<double> theta(n, 0.0);
  if (opts.start_seed != 0) {
    std::mt19937 rng(opts.start_seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (auto& t : theta) t = u(rng);
  }

  auto eval = [&](const std::vector<double>& th, std::vector<double>& grad) {
    std::vector<double> w(th.begin(), th.begin() + dim);
    std::vector<double> gw;
    double gb;
    const double loss = logistic_loss(X, y, w, th[dim], C);
    logistic_gradient(X, y, w, th[dim], C, gw, gb);
    grad.assign(gw.begin(), gw.end());
    grad.push_back(gb);
    return loss;
  };

  std::vector<double> grad(n);
  double loss = eval(theta, grad);
  if (!std::isfinite(loss)) throw std::runtime_error("train_binary: non-finite initial loss");

  // L-BFGS history
  const std::size_t history = 10;
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;
  std::vector<double> prev_theta, prev_grad;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::fabs(g));
    if (gmax < opts.tol) break;

    // two-loop recursion
    std::vector<double> dir(grad);
    std::vector<double> alphas(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      double a = 0.0;
      for (std::size_t j = 0; j < n; ++j) a += s_hist[k][j] * dir[j];
      a *= rho_hist[k];
      alphas[k] = a;
      for (std::size_t j = 0; j < n; ++j) dir[j] -= a * y_hist[k][j];
    }
    if (!s_hist.empty()) {
      double sy = 0.0, yy = 0.0;
      const auto& sl = s_hist.back();
      const auto& yl = y_hist.back();
      for (std::size_t j = 0; j < n; ++j) {
        sy += sl[j] * yl[j];
        yy += yl[j] * yl[j];
      }
      const double gamma = sy / yy;
      for (auto& d : dir) d *= gamma;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      double beta = 0.0;
      for (std::size_t j = 0; j < n; ++j) beta += y_hist[k][j] * dir[j];
      beta *= rho_hist[k];
      for (std::size_t j = 0; j < n; ++j) dir[j] += s_hist[k][j] * (alphas[k] - beta);
    }
    for (auto& d : dir) d = -d;

    double dg = 0.0;
    for (std::size_t j = 0; j < n; ++j) dg += dir[j] * grad[j];
    if (dg >= 0) {  // not a descent direction, fall back to steepest descent
      dg = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        dir[j] = -grad[j];
        dg -= grad[j] * grad[j];
      }
    }

    // backtracking Armijo line search
    double step = 1.0;
    std::vector<double> trial(n), trial_grad(n);
    double trial_loss = 0.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t j = 0; j < n; ++j) trial[j] = theta[j] + step * dir[j];
      trial_loss = eval(trial, trial_grad);
      if (!std::isfinite(trial_loss)) {
        throw std::runtime_error("train_binary: non-finite loss at iteration " +
                                 std::to_string(iter));
      }
      if (trial_loss <= loss + 1e-4 * step * dg) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no further progress at machine precision

    // update history
    std::vector<double> s(n), yv(n);
    double sy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = trial[j] - theta[j];
      yv[j] = trial_grad[j] - grad[j];
      sy += s[j] * yv[j];
    }
    if (sy > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    theta.swap(trial);
    grad.swap(trial_grad);
    loss = trial_loss;
  }

  LinearHead head;
  head.C = C;
  head.w.assign(theta.begin(), theta.begin() + dim);
  head.b = theta[dim];
  return head;
}

NbSvmModel train(const std::vector<LabeledExample>& dataset, Vocabulary vocab, double alpha,
                 double C, double beta) {
  if (beta < 0 || beta > 1) throw std::invalid_argument("train: beta must be in [0,1]");
  for (int k = 0; k < kNumClasses; ++k) {
    const auto label = static_cast<Label>(k);
    const bool present = std::any_of(dataset.begin(), dataset.end(),
                                     [&](const LabeledExample& e) { return e.label == label; });
    if (!present) {
      throw std::invalid_argument(std::string("train: class absent from training data: ") +
                                  to_string(label));
    }
  }

  std::vector<SparseVector> X;
  X.reserve(dataset.size());
  for (const auto& e : dataset) X.push_back(e.features);

  NbSvmModel model;
  model.vocab = std::move(vocab);
  model.alpha = alpha;
  model.C = C;
  model.beta = beta;

  for (int k = 0; k < kNumClasses; ++k) {
    std::vector<int> y(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      y[i] = dataset[i].label == static_cast<Label>(k) ? 1 : 0;
    }
    model.ratios[k] = log_count_ratios(X, y, alpha);
    std::vector<SparseVector> scaled;
    scaled.reserve(X.size());
    for (const auto& x : X) scaled.push_back(scale(x, model.ratios[k]));
    model.heads[k] = train_binary(scaled, y, C);

    if (beta < 1.0 && !model.heads[k].w.empty()) {
      double m = 0.0;
      for (double wj : model.heads[k].w) m += std::fabs(wj);
      m /= static_cast<double>(model.heads[k].w.size());
      for (auto& wj : model.heads[k].w) wj = (1.0 - beta) * m + beta * wj;
    }
  }
  return model;
}

std::array<double, kNumClasses> predict_proba(const NbSvmModel& model, const SparseVector& x) {
  if (x.dim != model.vocab.size()) throw std::invalid_argument("predict: dimension mismatch");
  std::array<double, kNumClasses> scores{};
  double total = 0.0;
  for (int k = 0; k < kNumClasses; ++k) {
    const auto scaled = scale(x, model.ratios[k]);
    scores[k] = sigmoid(dot(scaled, model.heads[k].w) + model.heads[k].b);
    total += scores[k];
  }
  for (auto& s : scores) s /= total;
  return scores;
}

Label predict(const NbSvmModel& model, const SparseVector& x) {
  const auto probs = predict_proba(model, x);
  int best = 0;
  for (int k = 1; k < kNumClasses; ++k) {
    if (probs[k] > probs[best]) best = k;
  }
  return static_cast<Label>(best);
}

void save_model(const NbSvmModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model: " + path);
  out << "#nbsvm\tv1\n";
  out << "alpha\t" << fmt_double(model.alpha) << "\tC\t" << fmt_double(model.C) << "\tbeta\t"
      << fmt_double(model.beta) << "\tV\t" << model.vocab.size() << '\n';
  model.vocab.write(out);
  for (int k = 0; k < kNumClasses; ++k) {
    out << "class\t" << to_string(static_cast<Label>(k)) << '\n';
    out << 'r';
    for (double v : model.ratios[k].r) out << '\t' << fmt_double(v);
    out << "\nw";
    for (double v : model.heads[k].w) out << '\t' << fmt_double(v);
    out << "\nb\t" << fmt_double(model.heads[k].b) << '\n';
  }
}

namespace {

std::vector<double> parse_row(const std::string& line, char tag, std::size_t expected) {
  std::istringstream ss(line);
  std::string head;
  std::getline(ss, head, '\t');
  if (head.size() != 1 || head[0] != tag) {
    throw std::runtime_error(std::string("model file: expected row '") + tag + "'");
  }
  std::vector<double> out;
  std::string field;
  while (std::getline(ss, field, '\t')) out.push_back(std::stod(field));
  if (out.size() != expected) throw std::runtime_error("model file: wrong row length");
  return out;
}

}  // namespace

NbSvmModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("#nbsvm", 0) != 0) {
    throw std::runtime_error("model file " + path + ": bad magic");
  }
  if (!std::getline(in, line)) throw std::runtime_error("model file: truncated header");
  NbSvmModel model;
  std::uint32_t V = 0;
  {
    std::istringstream ss(line);
    std::string key, val;
    while (std::getline(ss, key, '\t') && std::getline(ss, val, '\t')) {
      if (key == "alpha") model.alpha = std::stod(val);
      else if (key == "C") model.C = std::stod(val);
      else if (key == "beta") model.beta = std::stod(val);
      else if (key == "V") V = static_cast<std::uint32_t>(std::stoul(val));
    }
  }
  model.vocab = Vocabulary::read(in, V);
  if (model.vocab.size() != V) throw std::runtime_error("model file: vocabulary truncated");
  for (int k = 0; k < kNumClasses; ++k) {
    if (!std::getline(in, line) || line.rfind("class\t", 0) != 0) {
      throw std::runtime_error("model file: expected class header");
    }
    if (!std::getline(in, line)) throw std::runtime_error("model file: truncated");
    model.ratios[k].r = parse_row(line, 'r', V);
    model.ratios[k].alpha = model.alpha;
    if (!std::getline(in, line)) throw std::runtime_error("model file: truncated");
    model.heads[k].w = parse_row(line, 'w', V);
    model.heads[k].C = model.C;
    if (!std::getline(in, line)) throw std::runtime_error("model file: truncated");
    model.heads[k].b = parse_row(line, 'b', 1)[0];
  }
  return model;
}

}  // namespace codemix
