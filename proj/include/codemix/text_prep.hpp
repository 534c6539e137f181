#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "codemix/types.hpp"

namespace codemix {

// Emoji grapheme cluster (UTF-8) -> ascii name, e.g. "red_heart". Unknown
// emoji pass through unchanged.
class EmojiMap {
 public:
  EmojiMap() = default;

  void add(const std::string& emoji, const std::string& name);
  std::size_t size() const { return table_.size(); }
  std::size_t max_key_bytes() const { return max_key_bytes_; }

  const std::string* lookup(const std::string& key) const;

  // Built-in table of the most frequent emoji.
  static EmojiMap builtin();
  // TSV: emoji<TAB>name, UTF-8, '#' comments ignored. Entries extend/override.
  void load_tsv(const std::string& path);

 private:
  std::unordered_map<std::string, std::string> table_;
  std::size_t max_key_bytes_ = 0;
};

struct CleanConfig {
  bool strip_urls = true;
  std::string mention_token = "mention";
  std::string hashtag_token = "hashtag";
  std::string emoji_delimiter = " ";
};

// Keeps the first occurrence of each exact text; also drops tweets whose text
// equals an already-seen retweet_source_text.
std::vector<Tweet> dedup(const std::vector<Tweet>& tweets);

// Removes http(s)://... runs and bare t.co/... links, collapses the resulting
// double spaces, trims ends.
std::string strip_urls(const std::string& text);

// "@john" -> "mention john"; bare '@' untouched.
std::string replace_mentions(const std::string& text, const CleanConfig& config);

// "#love" -> "hashtag love"; bare '#' untouched.
std::string replace_hashtags(const std::string& text, const CleanConfig& config);

std::string demojize(const std::string& text, const EmojiMap& map, const CleanConfig& config);

std::string normalize_whitespace(const std::string& text);

// Full pipeline: urls -> mentions -> hashtags -> emoji -> whitespace.
// Idempotent.
std::string clean(const std::string& text, const EmojiMap& map, const CleanConfig& config);

}  // namespace codemix
