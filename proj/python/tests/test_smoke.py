import json
import math
import os
import pathlib

import pytest

import codemix


DATA = pathlib.Path(os.environ.get("CODEMIX_TEST_DATA", "tests/data"))


def test_clean_pipeline():
    out = codemix.clean("@john check https://t.co/abc #love ❤")
    assert out == "mention john check hashtag love red_heart"
    # idempotent
    assert codemix.clean(out) == out


def test_token_set_and_overlap():
    tokens = codemix.token_set("Kya baat hai!!")
    assert tokens == {"kya", "baat", "hai"}
    d = {"kya", "baat", "hai", "nahi"}
    assert codemix.overlap_score(tokens, d, "containment") == pytest.approx(1.0)
    assert codemix.overlap_score(tokens, d, "jaccard") == pytest.approx(3 / 4)


def test_tokenize_preserves_order_and_duplicates():
    assert codemix.tokenize("Good good, day!") == ["good", "good", "day"]


def test_nbsvm_train_predict_roundtrip(tmp_path):
    examples = [
        json.loads(line)
        for line in (DATA / "separable_train.jsonl").read_text().splitlines()
    ]
    texts = [e["text"] for e in examples]
    labels = [e["label"] for e in examples]
    model = codemix.NbSvm.train(texts, labels, min_df=1)
    assert model.vocab_size > 0

    preds = [model.predict(t) for t in texts]
    assert preds == labels  # linearly separable fixture

    probs = model.predict_proba(texts[0])
    assert len(probs) == 3
    assert math.isclose(sum(probs), 1.0, abs_tol=1e-9)

    path = tmp_path / "model.tsv"
    model.save(str(path))
    loaded = codemix.NbSvm.load(str(path))
    for t in texts[:10]:
        assert loaded.predict_proba(t) == model.predict_proba(t)


def test_weighted_vote_hand_example():
    # 0.9 positive loses to 0.6 + 0.4 negative
    got = codemix.weighted_vote(
        [(0.05, 0.05, 0.9), (0.6, 0.25, 0.15), (0.4, 0.3, 0.3)]
    )
    assert got == "negative"


def test_evaluate_hand_case():
    rep = codemix.evaluate(
        ["positive", "negative", "negative"],
        ["positive", "positive", "negative"],
    )
    assert rep["accuracy"] == pytest.approx(2 / 3)
    assert rep["macro_f1"] == pytest.approx(4 / 9)
    assert rep["weighted_f1"] == pytest.approx(2 / 3)
    assert rep["per_class"]["neutral"]["f1"] == 0.0


def test_evaluate_rejects_bad_labels():
    with pytest.raises(ValueError):
        codemix.evaluate(["positive"], ["meh"])
