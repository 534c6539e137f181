"""Code-mixed (Hinglish) sentiment toolkit.

Thin Python layer over the C++ core: tweet cleaning, dictionary-overlap
scoring, NB-SVM classification, confidence-weighted voting, and evaluation
metrics.
"""

from codemix._core import (
    NbSvm,
    clean,
    evaluate,
    overlap_score,
    token_set,
    tokenize,
    weighted_vote,
)

__all__ = [
    "NbSvm",
    "clean",
    "evaluate",
    "overlap_score",
    "token_set",
    "tokenize",
    "weighted_vote",
]

__version__ = "0.1.0"
