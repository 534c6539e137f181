#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "codemix/types.hpp"

namespace codemix {

// Rows = gold, cols = predicted, canonical class order.
struct ConfusionMatrix {
  std::array<std::array<std::int64_t, kNumClasses>, kNumClasses> counts{};
  std::int64_t total() const;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

struct MetricsReport {
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double weighted_f1 = 0.0;
  std::array<ClassMetrics, kNumClasses> per_class{};
};

ConfusionMatrix confusion(const std::vector<Label>& gold, const std::vector<Label>& pred);

// Zero-division convention: undefined P/R/F1 -> 0; all 3 classes always
// participate in the macro mean. Weighted-F1 weights by gold support.
MetricsReport report(const ConfusionMatrix& matrix);

std::string format_report(const MetricsReport& rep);
std::string report_to_json(const MetricsReport& rep);

}  // namespace codemix
