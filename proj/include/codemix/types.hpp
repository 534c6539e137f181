#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace codemix {

// Canonical class order: negative < neutral < positive. Tie-breaks and all
// probability triples follow this order.
enum class Label : int { negative = 0, neutral = 1, positive = 2 };

constexpr int kNumClasses = 3;

inline const char* to_string(Label l) {
  switch (l) {
    case Label::negative: return "negative";
    case Label::neutral: return "neutral";
    case Label::positive: return "positive";
  }
  return "?";
}

inline Label parse_label(const std::string& s) {
  if (s == "negative") return Label::negative;
  if (s == "neutral") return Label::neutral;
  if (s == "positive") return Label::positive;
  throw std::invalid_argument("unknown label: '" + s + "'");
}

struct Tweet {
  std::string id;
  std::string text;
  bool is_retweet = false;
  std::optional<std::string> retweet_source_text;
};

}  // namespace codemix
