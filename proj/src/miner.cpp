#include "codemix/miner.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace codemix {

namespace {

inline bool is_word_byte(unsigned char c) {
  // Non-ASCII bytes are treated as word characters so UTF-8 text survives.
  return c >= 0x80 || std::isalnum(c);
}

}  // namespace

std::string normalize_token(const std::string& piece) {
  std::size_t begin = 0;
  std::size_t end = piece.size();
  while (begin < end && !is_word_byte(static_cast<unsigned char>(piece[begin]))) ++begin;
  while (end > begin && !is_word_byte(static_cast<unsigned char>(piece[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(piece[i]))));
  }
  return out;
}

TokenSet token_set(const std::string& text) {
  TokenSet out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      std::string tok = normalize_token(text.substr(start, i - start));
      if (!tok.empty()) out.insert(std::move(tok));
    }
  }
  return out;
}

OverlapScore overlap_score(const TokenSet& tweet_tokens, const SeedDictionary& dict,
                           OverlapMode mode) {
  if (dict.entries.empty()) throw std::invalid_argument("overlap_score: empty dictionary");
  std::size_t inter = 0;
  for (const auto& t : tweet_tokens) {
    if (dict.entries.count(t)) ++inter;
  }
  OverlapScore score;
  score.mode = mode;
  if (mode == OverlapMode::jaccard) {
    const std::size_t uni = tweet_tokens.size() + dict.entries.size() - inter;
    score.value = uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
  } else {
    score.value = tweet_tokens.empty()
                      ? 0.0
                      : static_cast<double>(inter) / static_cast<double>(tweet_tokens.size());
  }
  return score;
}

std::pair<std::vector<Tweet>, std::vector<Tweet>> filter_batch(const std::vector<Tweet>& tweets,
                                                               const SeedDictionary& dict,
                                                               const MinerConfig& config) {
  std::vector<Tweet> accepted;
  std::vector<Tweet> rejected;
  for (const auto& tweet : tweets) {
    const auto score = overlap_score(token_set(tweet.text), dict, config.mode);
    if (score.value > config.threshold) {
      accepted.push_back(tweet);
    } else {
      rejected.push_back(tweet);
    }
  }
  return {std::move(accepted), std::move(rejected)};
}

CandidateSet extract_candidates(const std::vector<Tweet>& accepted, const SeedDictionary& dict,
                                int batch_index) {
  CandidateSet out;
  out.source_batch = batch_index;
  for (const auto& tweet : accepted) {
    for (auto& tok : token_set(tweet.text)) {
      if (!dict.entries.count(tok)) out.tokens.insert(tok);
    }
  }
  return out;
}

SeedDictionary merge_reviewed(const SeedDictionary& dict, const TokenSet& accepted_candidates) {
  std::vector<std::string> bad;
  for (const auto& tok : accepted_candidates) {
    if (tok.empty() || normalize_token(tok) != tok) bad.push_back(tok);
  }
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "merge_reviewed: non-normalized tokens in accept list:";
    for (const auto& t : bad) msg << " '" << t << "'";
    throw std::invalid_argument(msg.str());
  }
  SeedDictionary out;
  out.entries = dict.entries;
  out.entries.insert(accepted_candidates.begin(), accepted_candidates.end());
  out.version = dict.version + 1;
  return out;
}

OverlapMode parse_overlap_mode(const std::string& s) {
  if (s == "jaccard") return OverlapMode::jaccard;
  if (s == "containment") return OverlapMode::containment;
  throw std::invalid_argument("unknown overlap mode: '" + s + "'");
}

const char* to_string(OverlapMode mode) {
  return mode == OverlapMode::jaccard ? "jaccard" : "containment";
}

TokenSet load_token_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open token file: " + path);
  TokenSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(line);
  }
  return out;
}

SeedDictionary load_dictionary(const std::string& path) {
  SeedDictionary dict;
  dict.entries = load_token_list(path);
  dict.version = 1;
  return dict;
}

void save_token_list(const TokenSet& tokens, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write token file: " + path);
  for (const auto& tok : tokens) out << tok << '\n';
}

void save_dictionary(const SeedDictionary& dict, const std::string& path) {
  save_token_list(dict.entries, path);
}

}  // namespace codemix
