#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "codemix/metrics.hpp"

using namespace codemix;

namespace {

// naive per-example oracle, independent of the ConfusionMatrix path
struct OracleResult {
  double accuracy, macro_p, macro_r, macro_f1, weighted_f1;
};

OracleResult oracle(const std::vector<Label>& gold, const std::vector<Label>& pred) {
  OracleResult out{};
  int correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) ++correct;
  }
  out.accuracy = double(correct) / double(gold.size());
  double wsum = 0;
  std::size_t total = 0;
  for (int c = 0; c < 3; ++c) {
    int tp = 0, fp = 0, fn = 0, support = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      const bool g = int(gold[i]) == c;
      const bool p = int(pred[i]) == c;
      if (g) ++support;
      if (g && p) ++tp;
      if (!g && p) ++fp;
      if (g && !p) ++fn;
    }
    const double prec = tp + fp == 0 ? 0.0 : double(tp) / (tp + fp);
    const double rec = tp + fn == 0 ? 0.0 : double(tp) / (tp + fn);
    const double f1 = prec + rec == 0 ? 0.0 : 2 * prec * rec / (prec + rec);
    out.macro_p += prec / 3;
    out.macro_r += rec / 3;
    out.macro_f1 += f1 / 3;
    wsum += support * f1;
    total += support;
  }
  out.weighted_f1 = total == 0 ? 0.0 : wsum / double(total);
  return out;
}

}  // namespace

TEST_CASE("confusion tabulation") {
  auto m = confusion({Label::positive}, {Label::positive});
  CHECK(m.counts[2][2] == 1);
  CHECK(m.total() == 1);

  auto m2 = confusion({Label::positive, Label::negative, Label::negative},
                      {Label::positive, Label::positive, Label::negative});
  CHECK(m2.counts[2][2] == 1);
  CHECK(m2.counts[0][2] == 1);
  CHECK(m2.counts[0][0] == 1);
  CHECK(m2.total() == 3);

  CHECK_THROWS_AS(confusion({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(confusion({Label::positive}, {}), std::invalid_argument);
}

TEST_CASE("report: perfect predictions") {
  std::vector<Label> gold = {Label::negative, Label::neutral, Label::positive};
  auto rep = report(confusion(gold, gold));
  CHECK(rep.accuracy == 1.0);
  CHECK(rep.macro_f1 == 1.0);
  CHECK(rep.weighted_f1 == 1.0);
  CHECK(rep.macro_precision == 1.0);
  CHECK(rep.macro_recall == 1.0);
}

TEST_CASE("report: macro vs weighted discrimination case") {
  // gold=[pos,neg,neg], pred=[pos,pos,neg]
  std::vector<Label> gold = {Label::positive, Label::negative, Label::negative};
  std::vector<Label> pred = {Label::positive, Label::positive, Label::negative};
  auto rep = report(confusion(gold, pred));

  CHECK(rep.per_class[2].precision == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.per_class[2].recall == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.per_class[2].f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.per_class[0].precision == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.per_class[0].recall == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.per_class[0].f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.per_class[1].f1 == 0.0);
  CHECK(rep.per_class[1].support == 0);
  CHECK(rep.accuracy == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.macro_f1 == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(rep.weighted_f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("report: constant prediction on balanced gold") {
  std::vector<Label> gold, pred;
  for (int i = 0; i < 9; ++i) {
    gold.push_back(static_cast<Label>(i % 3));
    pred.push_back(Label::negative);
  }
  auto rep = report(confusion(gold, pred));
  CHECK(rep.accuracy == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // F1 for the predicted class: 2*(1/3)*1/(1/3+1) = 1/2; macro = 1/6
  CHECK(rep.macro_f1 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("metrics agree with per-example oracle on random sequences") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> len(1, 50);
  std::uniform_int_distribution<int> cls(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = len(rng);
    std::vector<Label> gold, pred;
    for (int i = 0; i < n; ++i) {
      gold.push_back(static_cast<Label>(cls(rng)));
      pred.push_back(static_cast<Label>(cls(rng)));
    }
    auto rep = report(confusion(gold, pred));
    auto want = oracle(gold, pred);
    CHECK(std::fabs(rep.accuracy - want.accuracy) <= 1e-12);
    CHECK(std::fabs(rep.macro_precision - want.macro_p) <= 1e-12);
    CHECK(std::fabs(rep.macro_recall - want.macro_r) <= 1e-12);
    CHECK(std::fabs(rep.macro_f1 - want.macro_f1) <= 1e-12);
    CHECK(std::fabs(rep.weighted_f1 - want.weighted_f1) <= 1e-12);

    for (int c = 0; c < 3; ++c) {
      CHECK(rep.per_class[c].f1 >= 0.0);
      CHECK(rep.per_class[c].f1 <= 1.0);
    }
    CHECK(rep.per_class[0].support + rep.per_class[1].support + rep.per_class[2].support == n);
  }
}

TEST_CASE("macro-F1 is population-blind, weighted-F1 is not") {
  std::vector<Label> gold, pred;
  auto push = [&](Label g, Label p, int times) {
    for (int i = 0; i < times; ++i) {
      gold.push_back(g);
      pred.push_back(p);
    }
  };
  // negative: all correct (F1=1, no one else predicts negative)
  push(Label::negative, Label::negative, 2);
  // positive: 1 of 3 correct, misses go to neutral (P=1, R=1/3, F1=1/2)
  push(Label::positive, Label::positive, 1);
  push(Label::positive, Label::neutral, 2);
  // neutral: all correct (R=1, P=1/2 from the spillover)
  push(Label::neutral, Label::neutral, 2);

  auto rep = report(confusion(gold, pred));

  // relabeling classes permutes (F1, support) pairs together: both averages
  // are invariant
  auto swap_label = [](Label l) {
    if (l == Label::negative) return Label::positive;
    if (l == Label::positive) return Label::negative;
    return l;
  };
  std::vector<Label> gold2, pred2;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    gold2.push_back(swap_label(gold[i]));
    pred2.push_back(swap_label(pred[i]));
  }
  auto rep2 = report(confusion(gold2, pred2));
  CHECK(std::fabs(rep.macro_f1 - rep2.macro_f1) <= 1e-12);
  CHECK(std::fabs(rep.weighted_f1 - rep2.weighted_f1) <= 1e-12);

  // doubling the isolated negative class changes no per-class F1, so macro
  // stays put while the support-weighted average moves
  push(Label::negative, Label::negative, 2);
  auto rep3 = report(confusion(gold, pred));
  CHECK(std::fabs(rep3.macro_f1 - rep.macro_f1) <= 1e-12);
  CHECK(std::fabs(rep3.weighted_f1 - rep.weighted_f1) > 1e-6);
}

TEST_CASE("json report contains the headline numbers") {
  std::vector<Label> gold = {Label::positive, Label::negative, Label::negative};
  std::vector<Label> pred = {Label::positive, Label::positive, Label::negative};
  auto rep = report(confusion(gold, pred));
  const auto json = report_to_json(rep);
  CHECK(json.find("macro_f1") != std::string::npos);
  CHECK(json.find("weighted_f1") != std::string::npos);
  CHECK(json.find("per_class") != std::string::npos);
  const auto text = format_report(rep);
  CHECK(text.find("macro-F1") != std::string::npos);
}
