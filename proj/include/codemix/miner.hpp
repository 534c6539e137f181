#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "codemix/types.hpp"

namespace codemix {

using TokenSet = std::set<std::string>;

// Curated set of normalized code-mix tokens. Grows between batches via
// merge_reviewed; never mutated in place.
struct SeedDictionary {
  TokenSet entries;
  int version = 0;
};

enum class OverlapMode { jaccard, containment };

struct OverlapScore {
  double value = 0.0;
  OverlapMode mode = OverlapMode::containment;
};

// Tokens seen in accepted tweets but absent from the dictionary; feeds
// offline human review.
struct CandidateSet {
  TokenSet tokens;
  int source_batch = 0;
};

struct MinerConfig {
  double threshold = 0.6;
  OverlapMode mode = OverlapMode::containment;
  std::size_t batch_size = 10000;
};

// Lowercase ASCII and strip leading/trailing ASCII non-alphanumerics.
// Bytes >= 0x80 count as word characters.
std::string normalize_token(const std::string& piece);

// Whitespace split + normalize_token + dedup.
TokenSet token_set(const std::string& text);

OverlapScore overlap_score(const TokenSet& tweet_tokens, const SeedDictionary& dict,
                           OverlapMode mode);

// Partition: accepted iff score strictly above config.threshold. Order
// preserved within each side.
std::pair<std::vector<Tweet>, std::vector<Tweet>> filter_batch(
    const std::vector<Tweet>& tweets, const SeedDictionary& dict, const MinerConfig& config);

CandidateSet extract_candidates(const std::vector<Tweet>& accepted, const SeedDictionary& dict,
                                int batch_index);

// Union with an offline-reviewed accept list; bumps version. Throws if any
// token is not already normalized.
SeedDictionary merge_reviewed(const SeedDictionary& dict, const TokenSet& accepted_candidates);

OverlapMode parse_overlap_mode(const std::string& s);
const char* to_string(OverlapMode mode);

// Dictionary file: one token per line, '#' comment lines ignored.
SeedDictionary load_dictionary(const std::string& path);
void save_dictionary(const SeedDictionary& dict, const std::string& path);
TokenSet load_token_list(const std::string& path);
void save_token_list(const TokenSet& tokens, const std::string& path);

}  // namespace codemix
