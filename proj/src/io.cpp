#include "codemix/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace codemix {

namespace {

Tweet tweet_from_json(const std::string& line, int lineno, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed JSON: " +
                             e.what());
  }
  Tweet t;
  if (j.contains("id")) {
    if (j["id"].is_string()) t.id = j["id"].get<std::string>();
    else t.id = j["id"].dump();
  } else {
    t.id = std::to_string(lineno);
  }
  t.text = j.value("text", std::string());
  if (j.contains("retweeted_text") && j["retweeted_text"].is_string()) {
    t.retweet_source_text = j["retweeted_text"].get<std::string>();
    t.is_retweet = true;
  }
  return t;
}

}  // namespace

void for_each_tweet_jsonl(const std::string& path, const std::function<bool(Tweet&&)>& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!fn(tweet_from_json(line, lineno, path))) return;
  }
}

void for_each_tweet_plain(const std::string& path, const std::function<bool(Tweet&&)>& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Tweet t;
    t.id = std::to_string(lineno);
    t.text = line;
    if (!fn(std::move(t))) return;
  }
}

std::vector<Tweet> read_tweets_jsonl(const std::string& path) {
  std::vector<Tweet> out;
  for_each_tweet_jsonl(path, [&](Tweet&& t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

std::vector<Tweet> read_tweets_plain(const std::string& path) {
  std::vector<Tweet> out;
  for_each_tweet_plain(path, [&](Tweet&& t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

void write_tweets_jsonl(const std::vector<Tweet>& tweets, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  for (const auto& t : tweets) {
    nlohmann::json j;
    j["id"] = t.id;
    j["text"] = t.text;
    if (t.retweet_source_text) j["retweeted_text"] = *t.retweet_source_text;
    out << j.dump() << '\n';
  }
}

std::vector<LabeledText> read_labeled_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open labeled data: " + path);
  std::vector<LabeledText> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed JSON: " +
                               e.what());
    }
    LabeledText ex;
    ex.id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>()
                                                    : std::to_string(lineno);
    ex.text = j.value("text", std::string());
    if (!j.contains("label")) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing label");
    }
    ex.label = parse_label(j["label"].get<std::string>());
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<std::pair<std::string, Label>> read_gold_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gold file: " + path);
  std::vector<std::pair<std::string, Label>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected id<TAB>label");
    }
    out.emplace_back(line.substr(0, tab), parse_label(line.substr(tab + 1)));
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace codemix
