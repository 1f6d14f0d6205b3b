"""Finitely supported idempotent (max-plus) measures and their monad.

A measure is kept in canonical form: one atom per point, no bottom
weights, and top weight exactly 0, so that equality of measures is plain
equality of atom tables and the monad laws hold exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyMeasure,
    MissingValue,
    MixedSpaces,
    NotNormalized,
    SpaceMismatch,
)
from .metric import FiniteMetricSpace, PointMap
from .rmax import as_float

NEG_INF = -math.inf


@dataclass(frozen=True)
class IdempotentMeasure:
    """Canonical finite-support max-plus measure on a finite metric space."""

    space: FiniteMetricSpace
    atoms: tuple[tuple[str, float], ...]  # in space point order, top weight 0

    def weight(self, point: str) -> float:
        """Atom weight at a point; -inf when the point carries no atom."""
        self.space.index(point)
        for p, w in self.atoms:
            if p == point:
                return w
        return NEG_INF

    def weight_vector(self) -> np.ndarray:
        """Dense weights over the whole point set, -inf for absent atoms."""
        out = np.full(len(self.space), NEG_INF)
        for p, w in self.atoms:
            out[self.space.index(p)] = w
        return out

    def __len__(self):
        return len(self.atoms)


def canonicalize(space: FiniteMetricSpace, raw_atoms, normalize: bool = False) -> IdempotentMeasure:
    """Merge duplicate points by max, drop bottoms, enforce top weight 0.

    In strict mode (default) a top weight other than 0 raises
    NotNormalized; with ``normalize=True`` all weights are shifted so the
    top becomes 0.
    """
    best: dict[int, float] = {}
    for point, w in raw_atoms:
        w = as_float(w)
        if w == NEG_INF:
            continue
        i = space.index(point)
        if i not in best or w > best[i]:
            best[i] = w
    if not best:
        raise EmptyMeasure("no atoms with finite weight")
    top = max(best.values())
    if top != 0.0:
        if not normalize:
            raise NotNormalized(f"top weight is {top}, expected 0")
        best = {i: w - top for i, w in best.items()}
    atoms = tuple((space.points[i], best[i]) for i in sorted(best))
    return IdempotentMeasure(space, atoms)


def dirac(space: FiniteMetricSpace, point: str) -> IdempotentMeasure:
    """The Dirac measure concentrated at a point."""
    space.index(point)
    return IdempotentMeasure(space, ((point, 0.0),))


def uniform_j(space: FiniteMetricSpace) -> IdempotentMeasure:
    """The measure with a zero-weight atom at every point (phi -> max phi)."""
    return IdempotentMeasure(space, tuple((p, 0.0) for p in space.points))


def integrate(mu: IdempotentMeasure, phi) -> float:
    """Maslov integral: max over atoms of phi(x) + weight."""
    if isinstance(phi, dict):
        def val(p):
            if p not in phi:
                raise MissingValue(p)
            return float(phi[p])
    elif callable(phi):
        val = phi
    else:
        arr = np.asarray(phi, dtype=float)
        if arr.shape != (len(mu.space),):
            raise MissingValue("value table does not match point set")
        val = lambda p: float(arr[mu.space.index(p)])
    return max(val(p) + w for p, w in mu.atoms)


def combine(pairs) -> IdempotentMeasure:
    """Max-plus combination oplus_i alpha_i odot mu_i.

    Coefficients must be normalized (max alpha = 0); pairs with bottom
    coefficient are dropped.  The result's weight at a point is the max
    over i of alpha_i + weight_i.
    """
    kept = []
    for alpha, mu in pairs:
        a = as_float(alpha)
        if a == NEG_INF:
            continue
        kept.append((a, mu))
    if not kept:
        raise EmptyMeasure("no pairs with finite coefficient")
    top = max(a for a, _ in kept)
    if top != 0.0:
        raise NotNormalized(f"max coefficient is {top}, expected 0")
    space = kept[0][1].space
    raw = []
    for a, mu in kept:
        if mu.space != space:
            raise MixedSpaces("measures live on different spaces")
        raw.extend((p, a + w) for p, w in mu.atoms)
    return canonicalize(space, raw)


def pushforward(mu: IdempotentMeasure, f: PointMap) -> IdempotentMeasure:
    """Image measure along a point map: atoms move to f(x), merged by max."""
    if mu.space != f.source:
        raise SpaceMismatch("measure does not live on the map's source")
    return canonicalize(f.target, ((f(p), w) for p, w in mu.atoms))


def support(mu: IdempotentMeasure) -> tuple[str, ...]:
    """The atom points (minimal carrier) in point order."""
    return tuple(p for p, _ in mu.atoms)


@dataclass(frozen=True)
class MetaMeasure:
    """Canonical measure whose atoms are themselves idempotent measures."""

    space: FiniteMetricSpace
    atoms: tuple[tuple[IdempotentMeasure, float], ...]  # top weight 0


def meta_measure(space: FiniteMetricSpace, raw_atoms, normalize: bool = False) -> MetaMeasure:
    """Canonicalize a measure on measures: dedup by measure equality,
    drop bottoms, top weight 0."""
    best: list[tuple[IdempotentMeasure, float]] = []
    for mu, w in raw_atoms:
        w = as_float(w)
        if w == NEG_INF:
            continue
        if mu.space != space:
            raise MixedSpaces("inner measure on a different space")
        for i, (nu, v) in enumerate(best):
            if nu == mu:
                if w > v:
                    best[i] = (mu, w)
                break
        else:
            best.append((mu, w))
    if not best:
        raise EmptyMeasure("no atoms with finite weight")
    top = max(w for _, w in best)
    if top != 0.0:
        if not normalize:
            raise NotNormalized(f"top weight is {top}, expected 0")
        best = [(mu, w - top) for mu, w in best]
    return MetaMeasure(space, tuple(best))


def flatten(M: MetaMeasure) -> IdempotentMeasure:
    """Monad multiplication: collapse a measure of measures via combine."""
    return combine((w, mu) for mu, w in M.atoms)


def dirac_lift(mu: IdempotentMeasure) -> MetaMeasure:
    """Push mu forward along the Dirac embedding: atoms (delta_x, weight)."""
    return meta_measure(
        mu.space, ((dirac(mu.space, p), w) for p, w in mu.atoms)
    )


def in_basic_neighborhood(nu: IdempotentMeasure, mu: IdempotentMeasure,
                          tests, epsilon: float) -> bool:
    """Membership in the weak* basic neighborhood <mu; tests; epsilon>."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return all(
        abs(integrate(mu, phi) - integrate(nu, phi)) < epsilon for phi in tests
    )
