#include "codemix/vectorizer.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "codemix/miner.hpp"

namespace codemix {

std::vector<std::string> tokenize(const std::string& text, bool lowercase) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      std::string piece = text.substr(start, i - start);
      std::string tok = normalize_token(piece);
      if (!lowercase) {
        // normalize_token lowercases; redo the strip without folding
        std::size_t b = 0, e = piece.size();
        auto word = [](unsigned char c) { return c >= 0x80 || std::isalnum(c); };
        while (b < e && !word(static_cast<unsigned char>(piece[b]))) ++b;
        while (e > b && !word(static_cast<unsigned char>(piece[e - 1]))) --e;
        tok = piece.substr(b, e - b);
      }
      if (!tok.empty()) out.push_back(std::move(tok));
    }
  }
  return out;
}

std::vector<std::string> ngrams(const std::vector<std::string>& tokens, int lo, int hi) {
  std::vector<std::string> out;
  for (int n = lo; n <= hi; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string g = tokens[i];
      for (int k = 1; k < n; ++k) {
        g.push_back('_');
        g += tokens[i + k];
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::int64_t Vocabulary::index_of(const std::string& ngram) const {
  auto it = index_.find(ngram);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& corpus,
                             VocabParams params) {
  if (corpus.empty()) throw std::invalid_argument("build_vocab: empty corpus");
  if (params.ngram_lo < 1 || params.ngram_lo > params.ngram_hi || params.ngram_hi > 3) {
    throw std::invalid_argument("build_vocab: need 1 <= lo <= hi <= 3");
  }
  if (params.min_df < 1) throw std::invalid_argument("build_vocab: min_df >= 1");

  // first-occurrence order + per-document frequency
  std::unordered_map<std::string, std::uint32_t> df;
  std::vector<std::string> order;
  std::unordered_map<std::string, std::uint32_t> last_doc;
  std::uint32_t doc_id = 0;
  for (const auto& tokens : corpus) {
    ++doc_id;
    for (auto& g : ngrams(tokens, params.ngram_lo, params.ngram_hi)) {
      auto [it, inserted] = last_doc.try_emplace(g, doc_id);
      if (inserted) {
        order.push_back(g);
        df[g] = 1;
      } else if (it->second != doc_id) {
        it->second = doc_id;
        ++df[g];
      }
    }
  }

  Vocabulary vocab(params);
  for (auto& g : order) {
    const std::uint32_t d = df[g];
    if (d < static_cast<std::uint32_t>(params.min_df)) continue;
    vocab.index_.emplace(g, static_cast<std::uint32_t>(vocab.ordered_.size()));
    vocab.ordered_.emplace_back(std::move(g), d);
  }
  return vocab;
}

SparseVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                       bool binarize) {
  std::map<std::uint32_t, double> counts;
  const auto& p = vocab.params();
  for (const auto& g : ngrams(tokens, p.ngram_lo, p.ngram_hi)) {
    const auto idx = vocab.index_of(g);
    if (idx >= 0) counts[static_cast<std::uint32_t>(idx)] += 1.0;
  }
  SparseVector out;
  out.dim = vocab.size();
  out.entries.reserve(counts.size());
  for (const auto& [idx, c] : counts) {
    out.entries.emplace_back(idx, binarize ? 1.0 : c);
  }
  return out;
}

void Vocabulary::write(std::ostream& out) const {
  out << "#vocab\tngram_lo=" << params_.ngram_lo << "\tngram_hi=" << params_.ngram_hi
      << "\tmin_df=" << params_.min_df << "\tlowercase=" << (params_.lowercase ? 1 : 0)
      << "\tbinarize=" << (params_.binarize ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    out << ordered_[i].first << '\t' << i << '\t' << ordered_[i].second << '\n';
  }
}

void Vocabulary::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write vocabulary: " + path);
  write(out);
}

Vocabulary Vocabulary::read(std::istream& in, std::uint32_t expected_rows) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("#vocab", 0) != 0) {
    throw std::runtime_error("vocabulary: missing #vocab header");
  }
  VocabParams params;
  {
    std::istringstream hdr(line);
    std::string field;
    while (std::getline(hdr, field, '\t')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = field.substr(0, eq);
      const int val = std::stoi(field.substr(eq + 1));
      if (key == "ngram_lo") params.ngram_lo = val;
      else if (key == "ngram_hi") params.ngram_hi = val;
      else if (key == "min_df") params.min_df = val;
      else if (key == "lowercase") params.lowercase = val != 0;
      else if (key == "binarize") params.binarize = val != 0;
    }
  }
  Vocabulary vocab(params);
  while (vocab.ordered_.size() < expected_rows && std::getline(in, line)) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw std::runtime_error("vocabulary: malformed row: " + line);
    }
    std::string ngram = line.substr(0, t1);
    const auto idx = static_cast<std::uint32_t>(std::stoul(line.substr(t1 + 1, t2 - t1 - 1)));
    const auto df = static_cast<std::uint32_t>(std::stoul(line.substr(t2 + 1)));
    if (idx != vocab.ordered_.size()) {
      throw std::runtime_error("vocabulary: out-of-order index " + std::to_string(idx));
    }
    vocab.index_.emplace(ngram, idx);
    vocab.ordered_.emplace_back(std::move(ngram), df);
  }
  return vocab;
}

Vocabulary Vocabulary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vocabulary: " + path);
  return read(in, UINT32_MAX);
}

}  // namespace codemix
