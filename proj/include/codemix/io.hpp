#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "codemix/types.hpp"

namespace codemix {

// JSON-lines corpus: {"id": ..., "text": ..., "retweeted_text": ...}.
// Plain-text mode assigns ids "1", "2", ... by line number.
std::vector<Tweet> read_tweets_jsonl(const std::string& path);
std::vector<Tweet> read_tweets_plain(const std::string& path);

// Streaming variant for large corpora; stops early when the callback
// returns false.
void for_each_tweet_jsonl(const std::string& path,
                          const std::function<bool(Tweet&&)>& fn);
void for_each_tweet_plain(const std::string& path,
                          const std::function<bool(Tweet&&)>& fn);

void write_tweets_jsonl(const std::vector<Tweet>& tweets, const std::string& path);

// Labeled JSONL: {"id": ..., "text": ..., "label": "positive"|...}.
struct LabeledText {
  std::string id;
  std::string text;
  Label label;
};
std::vector<LabeledText> read_labeled_jsonl(const std::string& path);

// Gold TSV: id<TAB>label.
std::vector<std::pair<std::string, Label>> read_gold_tsv(const std::string& path);

// Write via temp file + rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace codemix
