"""Bijections on the vertex set {1..n}.

Vertex renamings are passed around as plain mappings (``dict`` or any
``Mapping[int, int]``).  The helpers here normalise them into dense tuples
where ``perm[v - 1]`` is the image of ``v``.
"""

from __future__ import annotations

import random
from collections.abc import Mapping, Sequence

from .errors import PermutationError

Permutation = tuple[int, ...]


def as_permutation(mapping: Mapping[int, int] | Sequence[int], n: int) -> Permutation:
    """Return ``mapping`` as a dense tuple, raising if it is not a bijection on 1..n."""
    if isinstance(mapping, Mapping):
        if set(mapping) != set(range(1, n + 1)):
            raise PermutationError(f"domain is not {{1..{n}}}")
        images = tuple(mapping[v] for v in range(1, n + 1))
    else:
        images = tuple(mapping)
        if len(images) != n:
            raise PermutationError(f"expected {n} images, got {len(images)}")
    if sorted(images) != list(range(1, n + 1)):
        raise PermutationError(f"image is not {{1..{n}}}")
    return images


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def invert(perm: Permutation) -> Permutation:
    inverse = [0] * len(perm)
    for v, image in enumerate(perm, start=1):
        inverse[image - 1] = v
    return tuple(inverse)


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """``outer ∘ inner``: apply ``inner`` first."""
    return tuple(outer[image - 1] for image in inner)


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return tuple(images)


def to_dict(perm: Permutation) -> dict[int, int]:
    return {v: image for v, image in enumerate(perm, start=1)}
