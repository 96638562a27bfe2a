"""Counterfactual word-order toolkit for dependency-parsed corpora.

Transforms CoNLL-U treebanks into word-order variants by swapping
Greenbergian correlation pairs (verb/object, adposition/NP, copula/predicate,
auxiliary/VP, noun/genitive), with corpus preprocessing, swap statistics,
minimal-pair generation, and human-validation scoring.
"""

__version__ = "0.1.0"
