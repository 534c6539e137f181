#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace codemix {

struct SparseVector {
  // (index, value) pairs, indices strictly increasing, each < dim.
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::uint32_t dim = 0;
};

struct VocabParams {
  int ngram_lo = 1;
  int ngram_hi = 2;
  int min_df = 2;
  bool lowercase = true;
  bool binarize = true;
};

class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(VocabParams params) : params_(params) {}

  const VocabParams& params() const { return params_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(index_.size()); }

  // -1 if absent.
  std::int64_t index_of(const std::string& ngram) const;
  // ngrams in index order, with their build-time document frequencies.
  const std::vector<std::pair<std::string, std::uint32_t>>& ordered() const { return ordered_; }

  static Vocabulary build(const std::vector<std::vector<std::string>>& corpus, VocabParams params);

  // TSV with a one-line header carrying the params; ngram<TAB>index<TAB>df.
  void save(const std::string& path) const;
  static Vocabulary load(const std::string& path);
  void write(std::ostream& out) const;
  static Vocabulary read(std::istream& in, std::uint32_t expected_rows);

 private:
  VocabParams params_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::pair<std::string, std::uint32_t>> ordered_;  // (ngram, df)
};

// Whitespace split, strip edge punctuation, optional lowercase; order and
// duplicates preserved (a sequence, unlike miner's token_set).
std::vector<std::string> tokenize(const std::string& text, bool lowercase);

// Word n-grams joined with '_', n in [lo, hi], in-document order.
std::vector<std::string> ngrams(const std::vector<std::string>& tokens, int lo, int hi);

SparseVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                       bool binarize);

}  // namespace codemix
