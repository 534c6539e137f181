#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "codemix/ensemble.hpp"
#include "codemix/io.hpp"
#include "codemix/metrics.hpp"
#include "codemix/miner.hpp"
#include "codemix/nbsvm.hpp"
#include "codemix/text_prep.hpp"
#include "codemix/types.hpp"
#include "codemix/vectorizer.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct MineArgs {
  std::string input;
  std::string format = "jsonl";
  std::string dict_path;
  std::string out_dir = ".";
  std::string accept_list;
  std::string dict_out;
  double threshold = 0.6;
  std::string mode = "containment";
  std::size_t batch_size = 10000;
  std::size_t max_batches = 0;  // 0 = unbounded
};

struct CleanArgs {
  std::string input;
  std::string output;
  std::string emoji_map_path;
  bool no_strip_urls = false;
  std::string mention_token = "mention";
  std::string hashtag_token = "hashtag";
};

struct TrainArgs {
  std::string input;
  std::string model_out;
  double alpha = 1.0;
  double C = 4.0;
  double beta = 1.0;
  int ngram_lo = 1;
  int ngram_hi = 2;
  int min_df = 2;
  bool no_lowercase = false;
  bool no_binarize = false;
};

std::string require_env_free_path(const std::string& path, const char* what) {
  if (!fs::exists(path)) {
    throw std::invalid_argument(std::string(what) + " not found: " + path);
  }
  return path;
}

void echo_config(const std::string& out_dir, const std::string& name,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream cfg;
  for (const auto& [k, v] : kv) cfg << k << "=" << v << '\n';
  codemix::atomic_write((fs::path(out_dir) / (name + ".effective.cfg")).string(), cfg.str());
}

std::string basename_no_ext(const std::string& path) {
  return fs::path(path).stem().string();
}

std::string tweet_to_json(const codemix::Tweet& t) {
  json j;
  j["id"] = t.id;
  j["text"] = t.text;
  if (t.retweet_source_text) j["retweeted_text"] = *t.retweet_source_text;
  return j.dump();
}

int run_mine(const MineArgs& args) {
  using namespace codemix;
  require_env_free_path(args.input, "input corpus");
  require_env_free_path(args.dict_path, "dictionary");
  SeedDictionary dict = load_dictionary(args.dict_path);
  if (dict.entries.empty()) throw std::invalid_argument("dictionary is empty: " + args.dict_path);
  if (!args.accept_list.empty()) {
    dict = merge_reviewed(dict, load_token_list(require_env_free_path(args.accept_list,
                                                                      "accept list")));
  }
  MinerConfig config;
  config.threshold = args.threshold;
  config.mode = parse_overlap_mode(args.mode);
  config.batch_size = args.batch_size;
  if (config.threshold <= 0 || config.threshold > 1) {
    throw std::invalid_argument("threshold must be in (0,1]");
  }
  if (config.batch_size < 1) throw std::invalid_argument("batch-size must be >= 1");

  fs::create_directories(args.out_dir);
  std::ofstream accepted_out(fs::path(args.out_dir) / "accepted.jsonl");
  std::ofstream rejected_out(fs::path(args.out_dir) / "rejected.jsonl");

  std::array<std::size_t, 21> histogram{};  // 0.05 buckets, last = exactly 1.0
  json batch_reports = json::array();
  std::size_t total = 0, total_accepted = 0;
  std::size_t batch_index = 0;

  std::vector<Tweet> batch;
  batch.reserve(config.batch_size);

  auto flush_batch = [&]() {
    if (batch.empty()) return;
    double length_sum = 0;
    for (const auto& t : batch) {
      length_sum += double(t.text.size());
      const double score = overlap_score(token_set(t.text), dict, config.mode).value;
      const int bucket = std::min<int>(20, int(score / 0.05));
      ++histogram[bucket];
    }
    auto [acc, rej] = filter_batch(batch, dict, config);
    for (const auto& t : acc) accepted_out << tweet_to_json(t) << '\n';
    for (const auto& t : rej) rejected_out << tweet_to_json(t) << '\n';
    const auto candidates = extract_candidates(acc, dict, int(batch_index));
    char name[64];
    std::snprintf(name, sizeof(name), "candidates_batch_%03zu.txt", batch_index);
    save_token_list(candidates.tokens, (fs::path(args.out_dir) / name).string());

    json br;
    br["batch"] = batch_index;
    br["tweets"] = batch.size();
    br["accepted"] = acc.size();
    br["mean_tweet_length"] = length_sum / double(batch.size());
    br["candidates"] = candidates.tokens.size();
    batch_reports.push_back(br);

    total += batch.size();
    total_accepted += acc.size();
    ++batch_index;
    batch.clear();
  };

  auto consume = [&](Tweet&& t) {
    batch.push_back(std::move(t));
    if (batch.size() == config.batch_size) {
      flush_batch();
      if (args.max_batches > 0 && batch_index >= args.max_batches) return false;
    }
    return true;
  };
  if (args.format == "jsonl") for_each_tweet_jsonl(args.input, consume);
  else if (args.format == "plain") for_each_tweet_plain(args.input, consume);
  else throw std::invalid_argument("unknown format: " + args.format);
  if (args.max_batches == 0 || batch_index < args.max_batches) flush_batch();

  json report;
  report["total"] = total;
  report["accepted"] = total_accepted;
  report["rejected"] = total - total_accepted;
  report["threshold"] = config.threshold;
  report["mode"] = to_string(config.mode);
  report["dictionary_size"] = dict.entries.size();
  report["batches"] = batch_reports;
  json hist = json::array();
  for (int b = 0; b < 21; ++b) {
    json row;
    char label[32];
    if (b < 20) std::snprintf(label, sizeof(label), "[%.2f,%.2f)", b * 0.05, (b + 1) * 0.05);
    else std::snprintf(label, sizeof(label), "[1.00,1.00]");
    row["bucket"] = label;
    row["count"] = histogram[b];
    hist.push_back(row);
  }
  report["score_histogram"] = hist;
  atomic_write((fs::path(args.out_dir) / "report.json").string(), report.dump(2) + "\n");

  if (!args.dict_out.empty()) save_dictionary(dict, args.dict_out);
  echo_config(args.out_dir, "mine",
              {{"input", args.input},
               {"dict", args.dict_path},
               {"threshold", std::to_string(config.threshold)},
               {"mode", to_string(config.mode)},
               {"batch_size", std::to_string(config.batch_size)},
               {"max_batches", std::to_string(args.max_batches)}});
  std::cerr << "mine: " << total_accepted << "/" << total << " accepted over " << batch_index
            << " batch(es)\n";
  return 0;
}

int run_clean(const CleanArgs& args) {
  using namespace codemix;
  require_env_free_path(args.input, "input");
  EmojiMap emoji = EmojiMap::builtin();
  if (!args.emoji_map_path.empty()) emoji.load_tsv(args.emoji_map_path);
  CleanConfig config;
  config.strip_urls = !args.no_strip_urls;
  config.mention_token = args.mention_token;
  config.hashtag_token = args.hashtag_token;

  auto tweets = read_tweets_jsonl(args.input);
  tweets = dedup(tweets);
  std::ostringstream out;
  for (const auto& t : tweets) {
    json j;
    j["id"] = t.id;
    // already-cleaned input carries its original raw text forward
    j["raw_text"] = t.text;
    j["text"] = clean(t.text, emoji, config);
    out << j.dump() << '\n';
  }
  atomic_write(args.output, out.str());
  return 0;
}

codemix::NbSvmModel train_from_file(const TrainArgs& args) {
  using namespace codemix;
  auto examples = read_labeled_jsonl(require_env_free_path(args.input, "training data"));
  if (examples.empty()) throw std::invalid_argument("training data is empty: " + args.input);
  VocabParams params;
  params.ngram_lo = args.ngram_lo;
  params.ngram_hi = args.ngram_hi;
  params.min_df = args.min_df;
  params.lowercase = !args.no_lowercase;
  params.binarize = !args.no_binarize;

  std::vector<std::vector<std::string>> docs;
  docs.reserve(examples.size());
  for (const auto& ex : examples) docs.push_back(tokenize(ex.text, params.lowercase));
  auto vocab = Vocabulary::build(docs, params);

  std::vector<LabeledExample> dataset;
  dataset.reserve(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    dataset.push_back({vectorize(docs[i], vocab, params.binarize), examples[i].label});
  }
  return train(dataset, std::move(vocab), args.alpha, args.C, args.beta);
}

int run_predict(const std::string& input, const std::string& model_path,
                const std::string& output) {
  using namespace codemix;
  auto model = load_model(require_env_free_path(model_path, "model"));
  auto tweets = read_tweets_jsonl(require_env_free_path(input, "input"));
  const auto& params = model.vocab.params();
  PredictionTable table;
  table.model_name = basename_no_ext(model_path);
  for (const auto& t : tweets) {
    const auto x = vectorize(tokenize(t.text, params.lowercase), model.vocab, params.binarize);
    table.add(make_record(t.id, predict_proba(model, x)));
  }
  save_predictions(table, output);
  return 0;
}

std::vector<codemix::PredictionTable> load_tables(const std::vector<std::string>& paths) {
  std::vector<codemix::PredictionTable> tables;
  for (const auto& p : paths) {
    tables.push_back(codemix::load_predictions(require_env_free_path(p, "prediction file"),
                                               basename_no_ext(p)));
  }
  return tables;
}

void check_consistent_ids(const std::vector<codemix::PredictionTable>& tables) {
  for (std::size_t k = 1; k < tables.size(); ++k) {
    if (tables[k].records.size() != tables[0].records.size()) {
      throw std::invalid_argument("prediction tables disagree on example count ('" +
                                  tables[0].model_name + "' vs '" + tables[k].model_name + "')");
    }
  }
}

int run_vote(const std::vector<std::string>& pred_paths, const std::string& output) {
  using namespace codemix;
  auto tables = load_tables(pred_paths);
  if (tables.empty()) throw std::invalid_argument("vote: need at least one prediction file");
  check_consistent_ids(tables);
  PredictionTable result;
  result.model_name = "weighted_vote";
  for (const auto& id : tables[0].ids) {
    auto scores = vote_scores(tables, id);
    double sum = scores[0] + scores[1] + scores[2];
    std::array<double, kNumClasses> probs{};
    for (int k = 0; k < kNumClasses; ++k) probs[k] = scores[k] / sum;
    result.add(make_record(id, probs));
  }
  save_predictions(result, output);
  return 0;
}

int run_funnel_train(const std::vector<std::string>& pred_paths, const std::string& gold_path,
                     const std::string& model_out, double C) {
  using namespace codemix;
  auto tables = load_tables(pred_paths);
  auto gold = read_gold_tsv(require_env_free_path(gold_path, "gold file"));
  auto model = funnel_train(tables, gold, C);
  save_funnel(model, model_out);
  return 0;
}

int run_funnel_predict(const std::string& model_path, const std::vector<std::string>& pred_paths,
                       const std::string& output) {
  using namespace codemix;
  auto model = load_funnel(require_env_free_path(model_path, "funnel model"));
  auto loaded = load_tables(pred_paths);
  // order tables as the model was trained
  std::vector<PredictionTable> tables;
  for (const auto& name : model.model_names) {
    auto it = std::find_if(loaded.begin(), loaded.end(),
                           [&](const PredictionTable& t) { return t.model_name == name; });
    if (it == loaded.end()) {
      throw std::invalid_argument("funnel-predict: missing prediction table '" + name + "'");
    }
    tables.push_back(std::move(*it));
    loaded.erase(it);
  }
  if (!loaded.empty()) {
    throw std::invalid_argument("funnel-predict: unexpected prediction table '" +
                                loaded[0].model_name + "'");
  }
  PredictionTable result;
  result.model_name = "funnel";
  for (const auto& id : tables[0].ids) {
    result.add(make_record(id, funnel_predict(model, tables, id).second));
  }
  save_predictions(result, output);
  return 0;
}

int run_eval(const std::string& gold_path, const std::string& pred_path,
             const std::string& json_out) {
  using namespace codemix;
  auto gold = read_gold_tsv(require_env_free_path(gold_path, "gold file"));
  auto table = load_predictions(require_env_free_path(pred_path, "prediction file"), "pred");

  std::vector<std::string> missing;
  for (const auto& [id, label] : gold) {
    if (!table.records.count(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "eval: prediction file is missing " << missing.size() << " gold id(s):";
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i) msg << ' ' << missing[i];
    if (missing.size() > 10) msg << " ...";
    throw std::invalid_argument(msg.str());
  }

  std::vector<Label> gold_labels, pred_labels;
  for (const auto& [id, label] : gold) {
    gold_labels.push_back(label);
    pred_labels.push_back(table.at(id).predicted);
  }
  auto rep = report(confusion(gold_labels, pred_labels));
  std::cout << format_report(rep);
  if (!json_out.empty()) atomic_write(json_out, report_to_json(rep) + "\n");
  return 0;
}

int run_sample(const std::string& input, int n, unsigned seed, const std::string& output) {
  using namespace codemix;
  auto tweets = read_tweets_jsonl(require_env_free_path(input, "input"));
  std::mt19937 rng(seed);
  std::vector<Tweet> reservoir;
  std::size_t seen = 0;
  for (auto& t : tweets) {
    ++seen;
    if (reservoir.size() < std::size_t(n)) {
      reservoir.push_back(std::move(t));
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, seen - 1);
      const auto j = pick(rng);
      if (j < std::size_t(n)) reservoir[j] = std::move(t);
    }
  }
  std::ostringstream out;
  for (const auto& t : reservoir) out << tweet_to_json(t) << '\n';
  if (output.empty()) std::cout << out.str();
  else atomic_write(output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"code-mixed sentiment toolkit: mine, clean, train, predict, ensemble, eval"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config file; flags override");

  MineArgs mine_args;
  auto* mine = app.add_subcommand("mine", "filter a raw corpus by dictionary overlap");
  mine->add_option("--input", mine_args.input, "corpus file")->required();
  mine->add_option("--format", mine_args.format, "jsonl|plain");
  mine->add_option("--dict", mine_args.dict_path, "seed dictionary")->required();
  mine->add_option("--out-dir", mine_args.out_dir, "output directory");
  mine->add_option("--accept-list", mine_args.accept_list, "reviewed candidates to merge first");
  mine->add_option("--dict-out", mine_args.dict_out, "write the (merged) dictionary here");
  mine->add_option("--threshold", mine_args.threshold, "acceptance threshold (strictly above)");
  mine->add_option("--mode", mine_args.mode, "containment|jaccard");
  mine->add_option("--batch-size", mine_args.batch_size, "tweets per batch");
  mine->add_option("--max-batches", mine_args.max_batches, "stop after N batches (0 = all)");

  CleanArgs clean_args;
  auto* clean_cmd = app.add_subcommand("clean", "dedup + cleaning pipeline");
  clean_cmd->add_option("--input", clean_args.input, "JSONL in")->required();
  clean_cmd->add_option("--output", clean_args.output, "JSONL out")->required();
  clean_cmd->add_option("--emoji-map", clean_args.emoji_map_path, "extra emoji TSV");
  clean_cmd->add_flag("--no-strip-urls", clean_args.no_strip_urls);
  clean_cmd->add_option("--mention-token", clean_args.mention_token);
  clean_cmd->add_option("--hashtag-token", clean_args.hashtag_token);

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "train the NB-SVM polarity model");
  train_cmd->add_option("--input", train_args.input, "labeled JSONL")->required();
  train_cmd->add_option("--model-out", train_args.model_out, "model file")->required();
  train_cmd->add_option("--alpha", train_args.alpha, "NB smoothing");
  train_cmd->add_option("-C,--C", train_args.C, "inverse regularization");
  train_cmd->add_option("--beta", train_args.beta, "weight interpolation in [0,1]");
  train_cmd->add_option("--ngram-lo", train_args.ngram_lo);
  train_cmd->add_option("--ngram-hi", train_args.ngram_hi);
  train_cmd->add_option("--min-df", train_args.min_df);
  train_cmd->add_flag("--no-lowercase", train_args.no_lowercase);
  train_cmd->add_flag("--no-binarize", train_args.no_binarize);

  std::string predict_input, predict_model, predict_output;
  auto* predict_cmd = app.add_subcommand("predict", "emit the prediction interchange CSV");
  predict_cmd->add_option("--input", predict_input, "JSONL with id,text")->required();
  predict_cmd->add_option("--model", predict_model)->required();
  predict_cmd->add_option("--output", predict_output)->required();

  std::vector<std::string> vote_preds;
  std::string vote_output;
  auto* vote_cmd = app.add_subcommand("vote", "confidence-weighted majority vote");
  vote_cmd->add_option("--pred", vote_preds, "prediction CSVs")->required()->expected(-1);
  vote_cmd->add_option("--output", vote_output)->required();

  std::vector<std::string> ft_preds;
  std::string ft_gold, ft_model_out;
  double ft_C = 1.0;
  auto* ft_cmd = app.add_subcommand("funnel-train", "train the LR stacking funnel");
  ft_cmd->add_option("--pred", ft_preds, "prediction CSVs (held-out split)")
      ->required()
      ->expected(-1);
  ft_cmd->add_option("--gold", ft_gold, "gold TSV")->required();
  ft_cmd->add_option("--model-out", ft_model_out)->required();
  ft_cmd->add_option("-C,--C", ft_C, "inverse regularization");

  std::string fp_model, fp_output;
  std::vector<std::string> fp_preds;
  auto* fp_cmd = app.add_subcommand("funnel-predict", "apply a trained funnel");
  fp_cmd->add_option("--model", fp_model)->required();
  fp_cmd->add_option("--pred", fp_preds, "prediction CSVs")->required()->expected(-1);
  fp_cmd->add_option("--output", fp_output)->required();

  std::string eval_gold, eval_pred, eval_json;
  auto* eval_cmd = app.add_subcommand("eval", "macro/weighted F1 report");
  eval_cmd->add_option("--gold", eval_gold, "gold TSV")->required();
  eval_cmd->add_option("--pred", eval_pred, "prediction CSV")->required();
  eval_cmd->add_option("--output-json", eval_json, "machine-readable report");

  std::string sample_input, sample_output;
  int sample_n = 50;
  unsigned sample_seed = 13;
  auto* sample_cmd = app.add_subcommand("sample", "random sample for manual purity labeling");
  sample_cmd->add_option("--input", sample_input, "JSONL (e.g. accepted.jsonl)")->required();
  sample_cmd->add_option("-n,--n", sample_n, "sample size");
  sample_cmd->add_option("--seed", sample_seed, "RNG seed");
  sample_cmd->add_option("--output", sample_output, "write here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mine->parsed()) return run_mine(mine_args);
    if (clean_cmd->parsed()) return run_clean(clean_args);
    if (train_cmd->parsed()) {
      auto model = train_from_file(train_args);
      codemix::save_model(model, train_args.model_out);
      return 0;
    }
    if (predict_cmd->parsed()) return run_predict(predict_input, predict_model, predict_output);
    if (vote_cmd->parsed()) return run_vote(vote_preds, vote_output);
    if (ft_cmd->parsed()) return run_funnel_train(ft_preds, ft_gold, ft_model_out, ft_C);
    if (fp_cmd->parsed()) return run_funnel_predict(fp_model, fp_preds, fp_output);
    if (eval_cmd->parsed()) return run_eval(eval_gold, eval_pred, eval_json);
    if (sample_cmd->parsed()) return run_sample(sample_input, sample_n, sample_seed, sample_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
