#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "codemix/text_prep.hpp"

using namespace codemix;

namespace {

const EmojiMap& emoji() {
  static EmojiMap map = EmojiMap::builtin();
  return map;
}

std::string run_clean(const std::string& text) {
  return clean(text, emoji(), CleanConfig{});
}

std::string random_tweetish(std::mt19937& rng) {
  static const char* pieces[] = {
      "hello",  "kya",        "baat",        "@user",    "@",         "#tag",
      "#",      "#a#b",       "https://t.co/Ab1", "http://x.y/z", "t.co/q",
      "❤",      "😂",         "🔥",          "✨",       "wo rd", "a@b",
      "c#",     "multi  space", "\ttab\t",   "...",      "end.",      "🤷",
  };
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> pick(0, int(std::size(pieces)) - 1);
  std::string out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    out += pieces[pick(rng)];
    if (i % 3 != 2) out.push_back(' ');
  }
  return out;
}

}  // namespace

TEST_CASE("dedup") {
  auto t = [](std::string id, std::string text) {
    Tweet tw;
    tw.id = std::move(id);
    tw.text = std::move(text);
    return tw;
  };

  std::vector<Tweet> in = {t("1", "a"), t("2", "a"), t("3", "b")};
  auto out = dedup(in);
  REQUIRE(out.size() == 2);
  CHECK(out[0].id == "1");
  CHECK(out[1].id == "3");

  // retweet source already seen drops the copy
  Tweet rt = t("1", "some comment");
  rt.is_retweet = true;
  rt.retweet_source_text = "x";
  std::vector<Tweet> in2 = {rt, t("2", "x")};
  auto out2 = dedup(in2);
  REQUIRE(out2.size() == 1);
  CHECK(out2[0].id == "1");

  // all distinct -> identity
  std::vector<Tweet> in3 = {t("1", "p"), t("2", "q")};
  CHECK(dedup(in3).size() == 2);

  // idempotent and pairwise distinct
  auto once = dedup(in);
  auto twice = dedup(once);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].text == twice[i].text);
  for (std::size_t i = 0; i < once.size(); ++i) {
    for (std::size_t j = i + 1; j < once.size(); ++j) CHECK(once[i].text != once[j].text);
  }
}

TEST_CASE("strip_urls") {
  CHECK(strip_urls("see https://t.co/abc now") == "see now");
  CHECK(strip_urls("no links here") == "no links here");
  CHECK(strip_urls("https://a.b https://c.d") == "");
  CHECK(strip_urls("plain http://example.com/page?q=1 end") == "plain end");
  CHECK(strip_urls("t.co/abc lead") == "lead");
  CHECK(strip_urls("not-a-link at.co/abc") == "not-a-link at.co/abc");
}

TEST_CASE("replace_mentions") {
  CleanConfig cfg;
  CHECK(replace_mentions("@john hi", cfg) == "mention john hi");
  CHECK(replace_mentions("a @ b", cfg) == "a @ b");
  CHECK(replace_mentions("@a @b", cfg) == "mention a mention b");
  CHECK(replace_mentions("a@b", cfg) == "a mention b");
  CHECK(replace_mentions("email me @", cfg) == "email me @");
}

TEST_CASE("replace_hashtags") {
  CleanConfig cfg;
  CHECK(replace_hashtags("#love it", cfg) == "hashtag love it");
  CHECK(replace_hashtags("c# code", cfg) == "c# code");
  CHECK(replace_hashtags("#a#b", cfg) == "hashtag a hashtag b");
}

TEST_CASE("demojize") {
  CleanConfig cfg;
  CHECK(normalize_whitespace(demojize("I ❤ you", emoji(), cfg)) == "I red_heart you");
  CHECK(demojize("plain text", emoji(), cfg) == "plain text");
  CHECK(normalize_whitespace(demojize("❤❤", emoji(), cfg)) == "red_heart red_heart");
  // emoji-presentation variant maps to the same name
  CHECK(normalize_whitespace(demojize("❤️", emoji(), cfg)) == "red_heart");
  // unmapped emoji pass through
  const std::string rare = "\xf0\x9f\xa9\xb0";  // U+1FA70
  CHECK(demojize(rare, emoji(), cfg) == rare);
}

TEST_CASE("clean full pipeline") {
  CHECK(run_clean("@john see https://t.co/x #wow ❤") == "mention john see hashtag wow red_heart");
  CHECK(run_clean("") == "");
  CHECK(run_clean("  spaced   out  ") == "spaced out");
}

TEST_CASE("clean is idempotent on the worked examples") {
  for (const std::string s :
       {"@john see https://t.co/x #wow ❤", "see https://t.co/abc now", "#a#b @a @b ❤❤"}) {
    const auto once = run_clean(s);
    CHECK(run_clean(once) == once);
  }
}

TEST_CASE("clean properties over fuzzed strings") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::string raw = random_tweetish(rng);
    const std::string out = run_clean(raw);

    CHECK(run_clean(out) == out);  // idempotence

    // no leading/trailing whitespace, no double spaces
    if (!out.empty()) {
      CHECK(out.front() != ' ');
      CHECK(out.back() != ' ');
    }
    CHECK(out.find("  ") == std::string::npos);

    // no sigil immediately followed by a word character
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i] == '@' || out[i] == '#') {
        const unsigned char next = static_cast<unsigned char>(out[i + 1]);
        const bool wordish =
            std::isalnum(next) != 0 || next == '_' || (out[i] == '#' && next >= 0x80);
        CHECK_FALSE(wordish);
      }
    }

    // no URL patterns survive
    CHECK(out.find("http://") == std::string::npos);
    CHECK(out.find("https://") == std::string::npos);
    if (out.rfind("t.co/", 0) == 0) CHECK(false);
    CHECK(out.find(" t.co/") == std::string::npos);
  }
}

TEST_CASE("custom tokens and disabled url stripping") {
  CleanConfig cfg;
  cfg.mention_token = "USER";
  cfg.hashtag_token = "TAG";
  cfg.strip_urls = false;
  CHECK(clean("@a #b", emoji(), cfg) == "USER a TAG b");
  CHECK(clean("keep http://x", emoji(), cfg).find("http://x") != std::string::npos);
}

TEST_CASE("emoji map TSV loading") {
  const std::string data = std::getenv("CODEMIX_TEST_DATA");
  EmojiMap map;
  map.load_tsv(data + "/emoji_extra.tsv");
  CHECK(map.size() == 2);
  CleanConfig cfg;
  CHECK(normalize_whitespace(demojize("🦄", map, cfg)) == "unicorn");
  CHECK_THROWS(map.add("x", "Bad Name"));
}

TEST_CASE("golden file: cleaned fixture matches byte for byte") {
  const std::string data = std::getenv("CODEMIX_TEST_DATA");
  std::ifstream in(data + "/clean_input.txt");
  std::ifstream gold(data + "/clean_golden.txt");
  REQUIRE(in.good());
  REQUIRE(gold.good());
  std::string raw, expected;
  int lines = 0;
  while (std::getline(in, raw)) {
    REQUIRE(std::getline(gold, expected));
    CHECK(run_clean(raw) == expected);
    ++lines;
  }
  CHECK(lines >= 10);
  CHECK_FALSE(std::getline(gold, expected));
}
