#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "codemix/nbsvm.hpp"
#include "codemix/types.hpp"

namespace codemix {

struct PredictionRecord {
  std::string example_id;
  std::array<double, kNumClasses> probs{};  // negative, neutral, positive
  Label predicted = Label::negative;        // argmax, canonical tie-break
  double confidence = 0.0;                  // max(probs)
};

struct PredictionTable {
  std::string model_name;
  std::vector<std::string> ids;  // input order
  std::unordered_map<std::string, PredictionRecord> records;

  const PredictionRecord& at(const std::string& id) const;
  void add(PredictionRecord rec);
};

// Stacking meta-classifier over concatenated probability triples.
struct FunnelModel {
  std::vector<std::string> model_names;
  std::array<LinearHead, kNumClasses> heads;
  double C = 1.0;
};

PredictionRecord make_record(std::string id, std::array<double, kNumClasses> probs);

// Interchange CSV: header id,p_negative,p_neutral,p_positive. Validates the
// probability invariants; duplicate ids and bad sums are errors with line
// numbers.
PredictionTable load_predictions(const std::string& path, const std::string& model_name);
void save_predictions(const PredictionTable& table, const std::string& path);

// Each model votes its argmax class with weight = confidence; largest sum
// wins, ties by canonical class order.
Label weighted_vote(const std::vector<PredictionTable>& tables, const std::string& id);
std::array<double, kNumClasses> vote_scores(const std::vector<PredictionTable>& tables,
                                            const std::string& id);

std::vector<double> funnel_features(const std::vector<PredictionTable>& tables,
                                    const std::string& id);

FunnelModel funnel_train(const std::vector<PredictionTable>& tables,
                         const std::vector<std::pair<std::string, Label>>& gold, double C);

std::pair<Label, std::array<double, kNumClasses>> funnel_predict(
    const FunnelModel& model, const std::vector<PredictionTable>& tables, const std::string& id);

void save_funnel(const FunnelModel& model, const std::string& path);
FunnelModel load_funnel(const std::string& path);

}  // namespace codemix
