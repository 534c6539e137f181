#include "codemix/metrics.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace codemix {

std::int64_t ConfusionMatrix::total() const {
  std::int64_t t = 0;
  for (const auto& row : counts) {
    for (auto c : row) t += c;
  }
  return t;
}

ConfusionMatrix confusion(const std::vector<Label>& gold, const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("confusion: gold and pred lengths differ (" +
                                std::to_string(gold.size()) + " vs " +
                                std::to_string(pred.size()) + ")");
  }
  if (gold.empty()) throw std::invalid_argument("confusion: empty input");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++m.counts[static_cast<int>(gold[i])][static_cast<int>(pred[i])];
  }
  return m;
}

MetricsReport report(const ConfusionMatrix& matrix) {
  MetricsReport rep;
  const double total = static_cast<double>(matrix.total());
  std::int64_t trace = 0;
  double weighted_sum = 0.0;
  std::int64_t support_sum = 0;

  for (int c = 0; c < kNumClasses; ++c) {
    std::int64_t tp = matrix.counts[c][c];
    std::int64_t fp = 0, fn = 0, support = 0;
    for (int o = 0; o < kNumClasses; ++o) {
      if (o != c) {
        fp += matrix.counts[o][c];
        fn += matrix.counts[c][o];
      }
      support += matrix.counts[c][o];
    }
    trace += tp;
    ClassMetrics& cm = rep.per_class[c];
    cm.support = support;
    cm.precision = (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    cm.recall = (tp + fn) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    cm.f1 = (cm.precision + cm.recall) == 0.0
                ? 0.0
                : 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall);
    rep.macro_precision += cm.precision / kNumClasses;
    rep.macro_recall += cm.recall / kNumClasses;
    rep.macro_f1 += cm.f1 / kNumClasses;
    weighted_sum += static_cast<double>(support) * cm.f1;
    support_sum += support;
  }
  rep.accuracy = total == 0 ? 0.0 : static_cast<double>(trace) / total;
  rep.weighted_f1 = support_sum == 0 ? 0.0 : weighted_sum / static_cast<double>(support_sum);
  return rep;
}

std::string format_report(const MetricsReport& rep) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "accuracy        " << rep.accuracy << '\n';
  out << "macro-precision " << rep.macro_precision << '\n';
  out << "macro-recall    " << rep.macro_recall << '\n';
  out << "macro-F1        " << rep.macro_f1 << '\n';
  out << "weighted-F1     " << rep.weighted_f1 << '\n';
  for (int c = 0; c < kNumClasses; ++c) {
    const auto& cm = rep.per_class[c];
    out << std::left << std::setw(10) << to_string(static_cast<Label>(c)) << std::right
        << " P=" << cm.precision << " R=" << cm.recall << " F1=" << cm.f1
        << " support=" << cm.support << '\n';
  }
  return out.str();
}

std::string report_to_json(const MetricsReport& rep) {
  nlohmann::json j;
  j["accuracy"] = rep.accuracy;
  j["macro_precision"] = rep.macro_precision;
  j["macro_recall"] = rep.macro_recall;
  j["macro_f1"] = rep.macro_f1;
  j["weighted_f1"] = rep.weighted_f1;
  for (int c = 0; c < kNumClasses; ++c) {
    const auto& cm = rep.per_class[c];
    nlohmann::json pc;
    pc["precision"] = cm.precision;
    pc["recall"] = cm.recall;
    pc["f1"] = cm.f1;
    pc["support"] = cm.support;
    j["per_class"][to_string(static_cast<Label>(c))] = pc;
  }
  return j.dump(2);
}

}  // namespace codemix
