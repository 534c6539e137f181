#include "codemix/text_prep.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace codemix {

namespace {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline bool is_handle_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_tag_char(char c) {
  return is_handle_char(c) || static_cast<unsigned char>(c) >= 0x80;
}

// Replaces every `sigil` immediately followed by a word character with the
// token plus a space, keeping the following text.
std::string replace_sigil(const std::string& text, char sigil, const std::string& token,
                          bool (*is_word)(char)) {
  std::string out;
  out.reserve(text.size() + 16);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == sigil && i + 1 < text.size() && is_word(text[i + 1])) {
      if (!out.empty() && !is_space(out.back())) out.push_back(' ');
      out += token;
      out.push_back(' ');
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

void EmojiMap::add(const std::string& emoji, const std::string& name) {
  if (emoji.empty()) throw std::invalid_argument("EmojiMap: empty key");
  for (char c : name) {
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
      throw std::invalid_argument("EmojiMap: bad name '" + name + "' (want [a-z0-9_]+)");
    }
  }
  table_[emoji] = name;
  if (emoji.size() > max_key_bytes_) max_key_bytes_ = emoji.size();
}

const std::string* EmojiMap::lookup(const std::string& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

void EmojiMap::load_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open emoji map: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("emoji map " + path + ": missing tab at line " +
                               std::to_string(lineno));
    }
    add(line.substr(0, tab), line.substr(tab + 1));
  }
}

std::vector<Tweet> dedup(const std::vector<Tweet>& tweets) {
  std::vector<Tweet> out;
  std::unordered_set<std::string> seen;
  for (const auto& tweet : tweets) {
    if (seen.count(tweet.text)) continue;
    out.push_back(tweet);
    seen.insert(tweet.text);
    if (tweet.retweet_source_text) seen.insert(*tweet.retweet_source_text);
  }
  return out;
}

std::string strip_urls(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const bool scheme = text.compare(i, 7, "http://") == 0 || text.compare(i, 8, "https://") == 0;
    // Any non-word character delimits a bare link. Letters/digits/underscore
    // are the only prefixes that survive the pipeline unchanged, so this is
    // what keeps clean idempotent (sigils and emoji turn into spaced tokens).
    const unsigned char prev = i == 0 ? ' ' : static_cast<unsigned char>(text[i - 1]);
    const bool word_prev = prev < 0x80 && (std::isalnum(prev) || prev == '_');
    const bool bare_tco = text.compare(i, 5, "t.co/") == 0 && !word_prev;
    if (scheme || bare_tco) {
      while (i < n && !is_space(text[i])) ++i;
      continue;
    }
    out.push_back(text[i++]);
  }
  // collapse doubled spaces left by removals, trim ends
  std::string collapsed;
  collapsed.reserve(out.size());
  for (char c : out) {
    if (c == ' ' && !collapsed.empty() && collapsed.back() == ' ') continue;
    collapsed.push_back(c);
  }
  std::size_t b = 0, e = collapsed.size();
  while (b < e && is_space(collapsed[b])) ++b;
  while (e > b && is_space(collapsed[e - 1])) --e;
  return collapsed.substr(b, e - b);
}

std::string replace_mentions(const std::string& text, const CleanConfig& config) {
  return replace_sigil(text, '@', config.mention_token, is_handle_char);
}

std::string replace_hashtags(const std::string& text, const CleanConfig& config) {
  return replace_sigil(text, '#', config.hashtag_token, is_tag_char);
}

std::string demojize(const std::string& text, const EmojiMap& map, const CleanConfig& config) {
  if (map.size() == 0) return text;
  std::string out;
  out.reserve(text.size());
  const std::size_t n = text.size();
  std::size_t i = 0;
  std::string key;
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {  // emoji keys are multi-byte UTF-8
      out.push_back(text[i++]);
      continue;
    }
    const std::size_t max_len = std::min(map.max_key_bytes(), n - i);
    const std::string* name = nullptr;
    std::size_t match_len = 0;
    for (std::size_t len = max_len; len >= 2; --len) {
      key.assign(text, i, len);
      if ((name = map.lookup(key)) != nullptr) {
        match_len = len;
        break;
      }
    }
    if (name) {
      out += config.emoji_delimiter;
      out += *name;
      out += config.emoji_delimiter;
      i += match_len;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::string normalize_whitespace(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (is_space(c)) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string clean(const std::string& text, const EmojiMap& map, const CleanConfig& config) {
  std::string s = config.strip_urls ? strip_urls(text) : text;
  s = replace_mentions(s, config);
  s = replace_hashtags(s, config);
  s = demojize(s, map, config);
  return normalize_whitespace(s);
}

}  // namespace codemix
