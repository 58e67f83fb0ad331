"""scikit-learn style wrapper: graphs in, species keys out.

:class:`SpeciesLabeller` turns a batch of graphs into canonical digests
(``transform``) and, once fitted, maps graphs to the index of the species
seen during ``fit`` (``predict``), with ``-1`` for species it has not seen.
It holds no numeric state, so it composes with ``Pipeline`` and
``clone`` like any transformer.
"""

from __future__ import annotations

import json
from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .colgraph import ColouredGraph, check_graph, encode
from .errors import SgcanonError, ValidationError
from .labelling import LABELLERS, canonical_form
from .sitegraph import SiteGraph
from .sitegraph import check as check_site

INPUT_FORMATS = ("auto", "site", "coloured")


def as_coloured(item, input_format: str = "auto") -> ColouredGraph:
    """Coerce one graph (object, JSON dict or JSON text) to a validated coloured graph."""
    if isinstance(item, (str, bytes)):
        try:
            item = json.loads(item)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"not valid JSON: {exc}") from None
    if isinstance(item, dict):
        kind = input_format
        if kind == "auto":
            kind = "site" if "agents" in item else "coloured"
        item = SiteGraph.from_json(item) if kind == "site" else ColouredGraph.from_json(item)
    if isinstance(item, SiteGraph):
        if input_format == "coloured":
            raise ValidationError("expected a coloured graph, got a site graph")
        check_site(item, connected=True)
        return encode(item)
    if isinstance(item, ColouredGraph):
        if input_format == "site":
            raise ValidationError("expected a site graph, got a coloured graph")
        check_graph(item)
        return item
    raise ValidationError(f"cannot read a graph from {type(item).__name__}")


def check_graphs(X: Iterable, input_format: str = "auto") -> list[ColouredGraph]:
    """Validate a batch; errors name the position of the offending graph."""
    if input_format not in INPUT_FORMATS:
        raise ValueError(f"input_format must be one of {INPUT_FORMATS}, got {input_format!r}")
    if isinstance(X, (str, bytes, dict, SiteGraph, ColouredGraph)):
        raise ValidationError("expected a sequence of graphs, got a single graph")
    graphs = []
    for i, item in enumerate(X):
        try:
            graphs.append(as_coloured(item, input_format))
        except SgcanonError as exc:
            raise ValidationError(f"X[{i}]: {exc}") from None
    if not graphs:
        raise ValidationError("X holds no graphs")
    return graphs


class SpeciesLabeller(TransformerMixin, BaseEstimator):
    """Canonical digests as features; species indices as predictions.

    Parameters
    ----------
    algorithm : labeller name from :data:`sgcanon.labelling.LABELLERS`.
        Digests are only comparable between runs of the same algorithm.
    input_format : ``"auto"``, ``"site"`` or ``"coloured"``.
    """

    def __init__(self, algorithm: str = "pairwise", input_format: str = "auto"):
        self.algorithm = algorithm
        self.input_format = input_format

    def _digests(self, X) -> np.ndarray:
        if self.algorithm not in LABELLERS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; choose from {sorted(LABELLERS)}")
        graphs = check_graphs(X, self.input_format)
        return np.array([canonical_form(g, self.algorithm).digest for g in graphs], dtype=object)

    def fit(self, X, y=None):
        digests = self._digests(X)
        self.species_ = np.array(list(dict.fromkeys(digests)), dtype=object)
        self.index_ = {d: i for i, d in enumerate(self.species_)}
        self.n_species_ = len(self.species_)
        return self

    def transform(self, X) -> np.ndarray:
        """Digest of each graph's canonical form, shape ``(n_graphs,)``."""
        return self._digests(X)

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "species_")
        return np.array([self.index_.get(d, -1) for d in self._digests(X)], dtype=int)

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X).predict(X)
