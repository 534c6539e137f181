#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "codemix/ensemble.hpp"

using namespace codemix;

namespace {

PredictionTable table_of(std::string name,
                         std::vector<std::pair<std::string, std::array<double, 3>>> rows) {
  PredictionTable t;
  t.model_name = std::move(name);
  for (auto& [id, probs] : rows) t.add(make_record(id, probs));
  return t;
}

// exhaustive per-class tabulation, written independently of vote_scores
Label oracle_vote(const std::vector<PredictionTable>& tables, const std::string& id) {
  double best_score = -1.0;
  int best_class = 0;
  for (int c = 0; c < kNumClasses; ++c) {
    double s = 0.0;
    for (const auto& t : tables) {
      const auto& rec = t.records.at(id);
      int arg = 0;
      for (int k = 1; k < kNumClasses; ++k) {
        if (rec.probs[k] > rec.probs[arg]) arg = k;
      }
      if (arg == c) s += rec.probs[arg];
    }
    if (s > best_score) {  // strict: earlier class wins ties
      best_score = s;
      best_class = c;
    }
  }
  return static_cast<Label>(best_class);
}

std::array<double, 3> random_probs(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::array<double, 3> p{u(rng), u(rng), u(rng)};
  const double s = p[0] + p[1] + p[2];
  for (auto& v : p) v /= s;
  return p;
}

std::string write_temp(const std::string& content) {
  static int counter = 0;
  std::string path = "ensemble_test_" + std::to_string(counter++) + ".csv";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("load_predictions validation") {
  const std::string good = write_temp(
      "id,p_negative,p_neutral,p_positive\n"
      "a,0.2,0.3,0.5\n"
      "b,1.0,0.0,0.0\n"
      "c,0.333333,0.333333,0.333334\n");
  auto table = load_predictions(good, "m1");
  std::remove(good.c_str());
  CHECK(table.records.size() == 3);
  CHECK(table.at("a").predicted == Label::positive);
  CHECK(table.at("a").confidence == doctest::Approx(0.5));

  const std::string bad_sum = write_temp(
      "id,p_negative,p_neutral,p_positive\nid1,0.5,0.5,0.5\n");
  CHECK_THROWS_WITH_AS(load_predictions(bad_sum, "m"), doctest::Contains(":2"),
                       std::runtime_error);
  std::remove(bad_sum.c_str());

  const std::string dup = write_temp(
      "id,p_negative,p_neutral,p_positive\na,1,0,0\na,0,1,0\n");
  CHECK_THROWS_WITH_AS(load_predictions(dup, "m"), doctest::Contains("duplicate"),
                       std::runtime_error);
  std::remove(dup.c_str());

  const std::string header_only = write_temp("id,p_negative,p_neutral,p_positive\n");
  auto empty = load_predictions(header_only, "m");
  std::remove(header_only.c_str());
  CHECK(empty.records.empty());

  const std::string bad_header = write_temp("id,a,b,c\n");
  CHECK_THROWS(load_predictions(bad_header, "m"));
  std::remove(bad_header.c_str());
}

TEST_CASE("prediction save/load round trip") {
  auto t = table_of("m", {{"x", {0.25, 0.25, 0.5}}, {"y", {0.7, 0.2, 0.1}}});
  const std::string path = "ensemble_rt.csv";
  save_predictions(t, path);
  auto back = load_predictions(path, "m");
  std::remove(path.c_str());
  REQUIRE(back.ids == t.ids);
  for (const auto& id : t.ids) {
    for (int k = 0; k < 3; ++k) CHECK(back.at(id).probs[k] == t.at(id).probs[k]);
  }
}

TEST_CASE("weighted_vote hand examples") {
  // unanimity
  std::vector<PredictionTable> same = {
      table_of("a", {{"x", {0.1, 0.1, 0.8}}}),
      table_of("b", {{"x", {0.2, 0.2, 0.6}}}),
  };
  CHECK(weighted_vote(same, "x") == Label::positive);

  // 0.9 positive vs 0.6 + 0.4 negative -> negative
  std::vector<PredictionTable> split = {
      table_of("a", {{"x", {0.05, 0.05, 0.9}}}),
      table_of("b", {{"x", {0.6, 0.25, 0.15}}}),
      table_of("c", {{"x", {0.4, 0.3, 0.3}}}),
  };
  CHECK(weighted_vote(split, "x") == Label::negative);

  // exact tie 0.7 vs 0.7 -> canonical order picks negative
  std::vector<PredictionTable> tie = {
      table_of("a", {{"x", {0.1, 0.2, 0.7}}}),
      table_of("b", {{"x", {0.7, 0.2, 0.1}}}),
  };
  CHECK(weighted_vote(tie, "x") == Label::negative);

  // missing id names the model
  CHECK_THROWS_WITH_AS(weighted_vote(tie, "absent"), doctest::Contains("'a'"),
                       std::invalid_argument);
}

TEST_CASE("weighted_vote agrees with brute-force enumeration") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> k_dist(1, 4);
  for (int trial = 0; trial < 600; ++trial) {
    const int K = k_dist(rng);
    std::vector<PredictionTable> tables;
    for (int k = 0; k < K; ++k) {
      tables.push_back(table_of("m" + std::to_string(k), {{"x", random_probs(rng)}}));
    }
    CHECK(weighted_vote(tables, "x") == oracle_vote(tables, "x"));
    // table order invariance
    std::vector<PredictionTable> rev(tables.rbegin(), tables.rend());
    CHECK(weighted_vote(rev, "x") == weighted_vote(tables, "x"));
  }
}

TEST_CASE("vote monotonicity in one model's confidence") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PredictionTable> tables;
    for (int k = 0; k < 3; ++k) {
      tables.push_back(table_of("m" + std::to_string(k), {{"x", random_probs(rng)}}));
    }
    const Label before = weighted_vote(tables, "x");
    // boost model 0's confidence in its own argmax
    auto& rec = tables[0].records.at("x");
    const int arg = static_cast<int>(rec.predicted);
    std::array<double, 3> boosted{};
    for (int k = 0; k < 3; ++k) boosted[k] = rec.probs[k] * 0.2;
    boosted[arg] = 1.0 - (boosted[(arg + 1) % 3] + boosted[(arg + 2) % 3]);
    tables[0] = table_of("m0", {{"x", boosted}});
    REQUIRE(tables[0].at("x").predicted == rec.predicted);
    const Label after = weighted_vote(tables, "x");
    if (before == rec.predicted) CHECK(after == before);
  }
}

TEST_CASE("funnel_features concatenation") {
  auto t1 = table_of("a", {{"x", {0.2, 0.3, 0.5}}});
  auto t2 = table_of("b", {{"x", {0.6, 0.3, 0.1}}});

  auto f1 = funnel_features({t1}, "x");
  CHECK(f1 == std::vector<double>{0.2, 0.3, 0.5});

  auto f2 = funnel_features({t1, t2}, "x");
  CHECK(f2 == std::vector<double>{0.2, 0.3, 0.5, 0.6, 0.3, 0.1});

  auto swapped = funnel_features({t2, t1}, "x");
  CHECK(swapped != f2);  // order matters; FunnelModel pins model_names

  CHECK_THROWS_AS(funnel_features({t1}, "missing"), std::invalid_argument);
}

TEST_CASE("funnel_train copies through a perfect base model") {
  std::mt19937 rng(7);
  PredictionTable base;
  base.model_name = "perfect";
  std::vector<std::pair<std::string, Label>> gold;
  for (int i = 0; i < 60; ++i) {
    const auto label = static_cast<Label>(i % 3);
    std::array<double, 3> p{0.05, 0.05, 0.05};
    p[static_cast<int>(label)] = 0.9;
    const std::string id = "e" + std::to_string(i);
    base.add(make_record(id, p));
    gold.emplace_back(id, label);
  }
  auto model = funnel_train({base}, gold, 1.0);
  int correct = 0;
  for (const auto& [id, label] : gold) {
    if (funnel_predict(model, {base}, id).first == label) ++correct;
  }
  CHECK(correct == int(gold.size()));
}

TEST_CASE("funnel agrees with a noisy separable base on >= 95%") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> noise(0.0, 0.15);
  PredictionTable base;
  base.model_name = "noisy";
  std::vector<std::pair<std::string, Label>> gold;
  for (int i = 0; i < 120; ++i) {
    const auto label = static_cast<Label>(i % 3);
    std::array<double, 3> p{noise(rng), noise(rng), noise(rng)};
    p[static_cast<int>(label)] += 1.0;
    const double s = p[0] + p[1] + p[2];
    for (auto& v : p) v /= s;
    const std::string id = "e" + std::to_string(i);
    base.add(make_record(id, p));
    gold.emplace_back(id, label);
  }
  auto model = funnel_train({base}, gold, 1.0);
  int agree = 0;
  for (const auto& [id, label] : gold) {
    if (funnel_predict(model, {base}, id).first == base.at(id).predicted) ++agree;
  }
  CHECK(double(agree) / double(gold.size()) >= 0.95);
}

TEST_CASE("funnel_train handles contradictory gold without error") {
  PredictionTable base;
  base.model_name = "m";
  std::vector<std::pair<std::string, Label>> gold;
  for (int i = 0; i < 9; ++i) {
    const std::string id = "e" + std::to_string(i);
    base.add(make_record(id, {0.4, 0.3, 0.3}));  // identical features
    gold.emplace_back(id, static_cast<Label>(i % 3));
  }
  auto model = funnel_train({base}, gold, 1.0);
  int correct = 0;
  for (const auto& [id, label] : gold) {
    if (funnel_predict(model, {base}, id).first == label) ++correct;
  }
  CHECK(correct < int(gold.size()));
}

TEST_CASE("funnel_train requires all classes") {
  PredictionTable base = table_of("m", {{"a", {1, 0, 0}}, {"b", {0, 0, 1}}});
  std::vector<std::pair<std::string, Label>> gold = {{"a", Label::negative},
                                                     {"b", Label::positive}};
  CHECK_THROWS_WITH_AS(funnel_train({base}, gold, 1.0), doctest::Contains("neutral"),
                       std::invalid_argument);
}

TEST_CASE("funnel_predict guards table arity and names") {
  auto t1 = table_of("a", {{"x", {0.2, 0.3, 0.5}}});
  auto t2 = table_of("b", {{"x", {0.6, 0.3, 0.1}}});
  std::vector<std::pair<std::string, Label>> gold = {
      {"x", Label::positive}, {"x2", Label::negative}, {"x3", Label::neutral}};
  auto t1b = table_of("a", {{"x", {0.2, 0.3, 0.5}},
                            {"x2", {0.8, 0.1, 0.1}},
                            {"x3", {0.1, 0.8, 0.1}}});
  auto t2b = table_of("b", {{"x", {0.6, 0.3, 0.1}},
                            {"x2", {0.7, 0.2, 0.1}},
                            {"x3", {0.2, 0.7, 0.1}}});
  auto model = funnel_train({t1b, t2b}, gold, 1.0);

  CHECK_THROWS_AS(funnel_predict(model, {t1b}, "x"), std::invalid_argument);
  CHECK_THROWS_AS(funnel_predict(model, {t2b, t1b}, "x"), std::invalid_argument);

  // deterministic
  auto a = funnel_predict(model, {t1b, t2b}, "x");
  auto b = funnel_predict(model, {t1b, t2b}, "x");
  CHECK(a.first == b.first);
  for (int k = 0; k < 3; ++k) CHECK(a.second[k] == b.second[k]);
  const double sum = a.second[0] + a.second[1] + a.second[2];
  CHECK(std::fabs(sum - 1.0) <= 1e-12);
}

TEST_CASE("funnel save/load round trip") {
  auto t1 = table_of("a", {{"x", {0.8, 0.1, 0.1}},
                           {"y", {0.1, 0.8, 0.1}},
                           {"z", {0.1, 0.1, 0.8}}});
  std::vector<std::pair<std::string, Label>> gold = {
      {"x", Label::negative}, {"y", Label::neutral}, {"z", Label::positive}};
  auto model = funnel_train({t1}, gold, 1.0);
  const std::string path = "funnel_rt.tsv";
  save_funnel(model, path);
  auto loaded = load_funnel(path);
  std::remove(path.c_str());

  CHECK(loaded.model_names == model.model_names);
  for (const auto& [id, label] : gold) {
    auto a = funnel_predict(model, {t1}, id);
    auto b = funnel_predict(loaded, {t1}, id);
    CHECK(a.first == b.first);
    for (int k = 0; k < 3; ++k) CHECK(a.second[k] == b.second[k]);
  }
}
