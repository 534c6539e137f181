#include "codemix/ensemble.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace codemix {

namespace {

inline double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int argmax3(const std::array<double, kNumClasses>& v) {
  int best = 0;
  for (int k = 1; k < kNumClasses; ++k) {
    if (v[k] > v[best]) best = k;
  }
  return best;
}

SparseVector to_sparse(const std::vector<double>& dense) {
  SparseVector out;
  out.dim = static_cast<std::uint32_t>(dense.size());
  for (std::uint32_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0.0) out.entries.emplace_back(j, dense[j]);
  }
  return out;
}

}  // namespace

PredictionRecord make_record(std::string id, std::array<double, kNumClasses> probs) {
  PredictionRecord rec;
  rec.example_id = std::move(id);
  rec.probs = probs;
  rec.predicted = static_cast<Label>(argmax3(probs));
  rec.confidence = probs[argmax3(probs)];
  return rec;
}

const PredictionRecord& PredictionTable::at(const std::string& id) const {
  auto it = records.find(id);
  if (it == records.end()) {
    throw std::invalid_argument("model '" + model_name + "' has no prediction for id '" + id +
                                "'");
  }
  return it->second;
}

void PredictionTable::add(PredictionRecord rec) {
  if (records.count(rec.example_id)) {
    throw std::invalid_argument("duplicate id '" + rec.example_id + "' in table '" + model_name +
                                "'");
  }
  ids.push_back(rec.example_id);
  records.emplace(rec.example_id, std::move(rec));
}

PredictionTable load_predictions(const std::string& path, const std::string& model_name) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open predictions: " + path);
  PredictionTable table;
  table.model_name = model_name;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file, expected header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "id,p_negative,p_neutral,p_positive") {
    throw std::runtime_error(path + ": bad header: '" + line + "'");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string id, f1, f2, f3;
    if (!std::getline(ss, id, ',') || !std::getline(ss, f1, ',') || !std::getline(ss, f2, ',') ||
        !std::getline(ss, f3)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    std::array<double, kNumClasses> probs{};
    try {
      probs = {std::stod(f1), std::stod(f2), std::stod(f3)};
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": non-numeric probability");
    }
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": probability out of [0,1]");
      }
      sum += p;
    }
    if (sum < 0.999 || sum > 1.001) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": probabilities sum to " +
                               std::to_string(sum));
    }
    try {
      table.add(make_record(std::move(id), probs));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return table;
}

void save_predictions(const PredictionTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write predictions: " + path);
  out << "id,p_negative,p_neutral,p_positive\n";
  for (const auto& id : table.ids) {
    const auto& rec = table.records.at(id);
    out << rec.example_id << ',' << fmt_double(rec.probs[0]) << ',' << fmt_double(rec.probs[1])
        << ',' << fmt_double(rec.probs[2]) << '\n';
  }
}

std::array<double, kNumClasses> vote_scores(const std::vector<PredictionTable>& tables,
                                            const std::string& id) {
  if (tables.empty()) throw std::invalid_argument("weighted_vote: no tables");
  std::array<double, kNumClasses> scores{};
  for (const auto& table : tables) {
    const auto& rec = table.at(id);
    scores[static_cast<int>(rec.predicted)] += rec.confidence;
  }
  return scores;
}

Label weighted_vote(const std::vector<PredictionTable>& tables, const std::string& id) {
  return static_cast<Label>(argmax3(vote_scores(tables, id)));
}

std::vector<double> funnel_features(const std::vector<PredictionTable>& tables,
                                    const std::string& id) {
  std::vector<double> out;
  out.reserve(3 * tables.size());
  for (const auto& table : tables) {
    const auto& rec = table.at(id);
    out.insert(out.end(), rec.probs.begin(), rec.probs.end());
  }
  return out;
}

FunnelModel funnel_train(const std::vector<PredictionTable>& tables,
                         const std::vector<std::pair<std::string, Label>>& gold, double C) {
  if (tables.empty()) throw std::invalid_argument("funnel_train: no tables");
  if (gold.empty()) throw std::invalid_argument("funnel_train: empty gold");

  std::vector<SparseVector> X;
  X.reserve(gold.size());
  for (const auto& [id, label] : gold) {
    (void)label;
    X.push_back(to_sparse(funnel_features(tables, id)));
  }

  FunnelModel model;
  model.C = C;
  for (const auto& table : tables) model.model_names.push_back(table.model_name);

  for (int k = 0; k < kNumClasses; ++k) {
    std::vector<int> y(gold.size());
    bool any = false;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      y[i] = gold[i].second == static_cast<Label>(k) ? 1 : 0;
      any = any || y[i] == 1;
    }
    if (!any) {
      throw std::invalid_argument(std::string("funnel_train: class absent from gold: ") +
                                  to_string(static_cast<Label>(k)));
    }
    model.heads[k] = train_binary(X, y, C);
  }
  return model;
}

std::pair<Label, std::array<double, kNumClasses>> funnel_predict(
    const FunnelModel& model, const std::vector<PredictionTable>& tables, const std::string& id) {
  if (tables.size() != model.model_names.size()) {
    throw std::invalid_argument("funnel_predict: expected " +
                                std::to_string(model.model_names.size()) + " tables, got " +
                                std::to_string(tables.size()));
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i].model_name != model.model_names[i]) {
      throw std::invalid_argument("funnel_predict: table '" + tables[i].model_name +
                                  "' does not match trained model name '" + model.model_names[i] +
                                  "'");
    }
  }
  const auto features = funnel_features(tables, id);
  std::array<double, kNumClasses> scores{};
  double total = 0.0;
  for (int k = 0; k < kNumClasses; ++k) {
    double f = model.heads[k].b;
    for (std::size_t j = 0; j < features.size(); ++j) f += model.heads[k].w[j] * features[j];
    scores[k] = sigmoid(f);
    total += scores[k];
  }
  for (auto& s : scores) s /= total;
  return {static_cast<Label>(argmax3(scores)), scores};
}

void save_funnel(const FunnelModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write funnel model: " + path);
  out << "#funnel\tv1\n";
  out << "C\t" << fmt_double(model.C) << "\tK\t" << model.model_names.size() << '\n';
  for (const auto& name : model.model_names) out << "model\t" << name << '\n';
  for (int k = 0; k < kNumClasses; ++k) {
    out << 'w';
    for (double v : model.heads[k].w) out << '\t' << fmt_double(v);
    out << "\nb\t" << fmt_double(model.heads[k].b) << '\n';
  }
}

FunnelModel load_funnel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open funnel model: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("#funnel", 0) != 0) {
    throw std::runtime_error("funnel model " + path + ": bad magic");
  }
  FunnelModel model;
  std::size_t K = 0;
  if (!std::getline(in, line)) throw std::runtime_error("funnel model: truncated header");
  {
    std::istringstream ss(line);
    std::string key, val;
    while (std::getline(ss, key, '\t') && std::getline(ss, val, '\t')) {
      if (key == "C") model.C = std::stod(val);
      else if (key == "K") K = std::stoul(val);
    }
  }
  for (std::size_t i = 0; i < K; ++i) {
    if (!std::getline(in, line) || line.rfind("model\t", 0) != 0) {
      throw std::runtime_error("funnel model: expected model name row");
    }
    model.model_names.push_back(line.substr(6));
  }
  for (int k = 0; k < kNumClasses; ++k) {
    if (!std::getline(in, line)) throw std::runtime_error("funnel model: truncated");
    {
      std::istringstream ss(line);
      std::string head, field;
      std::getline(ss, head, '\t');
      if (head != "w") throw std::runtime_error("funnel model: expected w row");
      while (std::getline(ss, field, '\t')) model.heads[k].w.push_back(std::stod(field));
      if (model.heads[k].w.size() != 3 * K) {
        throw std::runtime_error("funnel model: wrong weight length");
      }
    }
    if (!std::getline(in, line) || line.rfind("b\t", 0) != 0) {
      throw std::runtime_error("funnel model: expected b row");
    }
    model.heads[k].b = std::stod(line.substr(2));
    model.heads[k].C = model.C;
  }
  return model;
}

}  // namespace codemix
