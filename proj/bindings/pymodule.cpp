// Python surface for the codemix core: cleaning, overlap scoring, NB-SVM
// training/prediction, weighted voting, and evaluation metrics. Thin wrappers
// that convert to/from native Python containers; heavy lifting stays in C++.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "codemix/ensemble.hpp"
#include "codemix/metrics.hpp"
#include "codemix/miner.hpp"
#include "codemix/nbsvm.hpp"
#include "codemix/text_prep.hpp"
#include "codemix/vectorizer.hpp"

namespace py = pybind11;
using namespace codemix;

namespace {

Label label_from_string(const std::string& s) { return parse_label(s); }

// Python-facing classifier bundling the vocabulary with the trained model so
// callers pass raw text, not sparse vectors.
class PyNbSvm {
 public:
  static PyNbSvm train_texts(const std::vector<std::string>& texts,
                             const std::vector<std::string>& labels, double alpha, double C,
                             double beta, int ngram_lo, int ngram_hi, int min_df) {
    if (texts.size() != labels.size()) {
      throw std::invalid_argument("texts and labels must have equal length");
    }
    VocabParams params;
    params.ngram_lo = ngram_lo;
    params.ngram_hi = ngram_hi;
    params.min_df = min_df;
    std::vector<std::vector<std::string>> docs;
    docs.reserve(texts.size());
    for (const auto& t : texts) docs.push_back(tokenize(t, params.lowercase));
    auto vocab = Vocabulary::build(docs, params);

    std::vector<LabeledExample> dataset;
    dataset.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
      dataset.push_back({vectorize(docs[i], vocab, params.binarize),
                         label_from_string(labels[i])});
    }
    PyNbSvm out;
    out.model_ = train(dataset, std::move(vocab), alpha, C, beta);
    return out;
  }

  std::array<double, kNumClasses> predict_proba(const std::string& text) const {
    return codemix::predict_proba(model_, features(text));
  }

  std::string predict(const std::string& text) const {
    return to_string(codemix::predict(model_, features(text)));
  }

  std::size_t vocab_size() const { return model_.vocab.size(); }

  void save(const std::string& path) const { save_model(model_, path); }

  static PyNbSvm load(const std::string& path) {
    PyNbSvm out;
    out.model_ = load_model(path);
    return out;
  }

 private:
  SparseVector features(const std::string& text) const {
    const auto& p = model_.vocab.params();
    return vectorize(tokenize(text, p.lowercase), model_.vocab, p.binarize);
  }

  NbSvmModel model_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Code-mixed sentiment toolkit core";

  m.def(
      "clean",
      [](const std::string& text, const std::string& emoji_tsv) {
        EmojiMap emoji = EmojiMap::builtin();
        if (!emoji_tsv.empty()) emoji.load_tsv(emoji_tsv);
        return clean(text, emoji, CleanConfig{});
      },
      py::arg("text"), py::arg("emoji_tsv") = "",
      "Deterministic tweet cleaning: URLs stripped, @x -> 'mention x', #x -> "
      "'hashtag x', emoji to names, whitespace normalized. Idempotent.");

  m.def("token_set", &token_set, py::arg("text"),
        "Normalized token set used by the overlap miner.");

  m.def(
      "overlap_score",
      [](const std::set<std::string>& tweet_tokens, const std::set<std::string>& dict_tokens,
         const std::string& mode) {
        SeedDictionary dict{dict_tokens, 1};
        return overlap_score(tweet_tokens, dict, parse_overlap_mode(mode)).value;
      },
      py::arg("tweet_tokens"), py::arg("dict_tokens"), py::arg("mode") = "containment",
      "Jaccard or containment overlap between a tweet's tokens and a dictionary.");

  m.def("tokenize", &tokenize, py::arg("text"), py::arg("lowercase") = true,
        "Order- and duplicate-preserving token sequence for vectorization.");

  m.def(
      "weighted_vote",
      [](const std::vector<std::array<double, kNumClasses>>& member_probs) {
        std::vector<PredictionTable> tables(member_probs.size());
        for (std::size_t k = 0; k < member_probs.size(); ++k) {
          tables[k].model_name = "m" + std::to_string(k);
          tables[k].add(make_record("x", member_probs[k]));
        }
        return std::string(to_string(weighted_vote(tables, "x")));
      },
      py::arg("member_probs"),
      "Confidence-weighted majority vote over per-model probability triples "
      "(negative, neutral, positive) for one example.");

  m.def(
      "evaluate",
      [](const std::vector<std::string>& gold, const std::vector<std::string>& pred) {
        std::vector<Label> g, p;
        g.reserve(gold.size());
        p.reserve(pred.size());
        for (const auto& s : gold) g.push_back(label_from_string(s));
        for (const auto& s : pred) p.push_back(label_from_string(s));
        const auto rep = report(confusion(g, p));
        py::dict out;
        out["accuracy"] = rep.accuracy;
        out["macro_precision"] = rep.macro_precision;
        out["macro_recall"] = rep.macro_recall;
        out["macro_f1"] = rep.macro_f1;
        out["weighted_f1"] = rep.weighted_f1;
        py::dict per_class;
        for (int c = 0; c < kNumClasses; ++c) {
          py::dict cm;
          cm["precision"] = rep.per_class[c].precision;
          cm["recall"] = rep.per_class[c].recall;
          cm["f1"] = rep.per_class[c].f1;
          cm["support"] = rep.per_class[c].support;
          per_class[py::str(to_string(static_cast<Label>(c)))] = cm;
        }
        out["per_class"] = per_class;
        return out;
      },
      py::arg("gold"), py::arg("pred"),
      "Accuracy, macro/weighted F1, and per-class metrics over label strings.");

  py::class_<PyNbSvm>(m, "NbSvm", "NB-SVM classifier over word n-grams.")
      .def_static("train", &PyNbSvm::train_texts, py::arg("texts"), py::arg("labels"),
                  py::arg("alpha") = 1.0, py::arg("C") = 4.0, py::arg("beta") = 1.0,
                  py::arg("ngram_lo") = 1, py::arg("ngram_hi") = 2, py::arg("min_df") = 2)
      .def("predict", &PyNbSvm::predict, py::arg("text"))
      .def("predict_proba", &PyNbSvm::predict_proba, py::arg("text"),
           "(p_negative, p_neutral, p_positive), normalized sigmoid scores.")
      .def("save", &PyNbSvm::save, py::arg("path"))
      .def_static("load", &PyNbSvm::load, py::arg("path"))
      .def_property_readonly("vocab_size", &PyNbSvm::vocab_size);
}
