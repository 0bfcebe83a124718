"""Finite partially ordered sets.

The ground set is an ordered tuple of unique string labels.  The strict
order is stored as a dense boolean matrix that is always transitively
closed; covers are recovered by transitive reduction on demand.  Posets are
immutable once built, so derived structure (masks, profiles, the ideal
lattice) is cached on the instance and instances can be shared freely
between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    ArityMismatch,
    CycleDetected,
    DomainError,
    DuplicateLabel,
    NotApplicable,
    UnknownElement,
)

Label = str

#: Largest ground set for which max_incomparable_pair will run exhaustively.
EXACT_PAIR_SEARCH_LIMIT = 20


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Smallest transitive relation containing ``rel`` (boolean matrix)."""
    closed = np.asarray(rel, dtype=bool).copy()
    while True:
        reach = (closed.astype(np.int32) @ closed.astype(np.int32)) > 0
        grown = closed | reach
        if np.array_equal(grown, closed):
            return closed
        closed = grown


def transitive_reduction(lt: np.ndarray) -> np.ndarray:
    """Cover relation of a transitively closed strict order."""
    lt = np.asarray(lt, dtype=bool)
    composite = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
    return lt & ~composite


class Poset:
    """Immutable finite poset.

    ``lt[i, j]`` is True exactly when element i is strictly below element j.
    The matrix handed to the constructor must already be transitively
    closed; use :meth:`from_covers` to build from an arbitrary generating
    relation.
    """

    def __init__(self, labels: Sequence[Label], lt: np.ndarray):
        labels = tuple(labels)
        seen = set()
        for lab in labels:
            if lab in seen:
                raise DuplicateLabel(f"label {lab!r} appears twice")
            seen.add(lab)
        lt = np.array(lt, dtype=bool)
        n = len(labels)
        if lt.shape != (n, n):
            raise ValueError(f"matrix shape {lt.shape} does not match {n} labels")
        if lt.diagonal().any():
            raise CycleDetected("relation contains a cycle")
        if (lt & lt.T).any():
            raise CycleDetected("relation contains a 2-cycle")
        composite = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
        if (composite & ~lt).any():
            raise ValueError("relation is not transitively closed")
        lt.flags.writeable = False
        self.labels = labels
        self.lt = lt
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._cache: dict = {}

    # -- construction ------------------------------------------------

    @classmethod
    def from_covers(
        cls, labels: Sequence[Label], covers: Iterable[tuple[Label, Label]]
    ) -> "Poset":
        """Build from any generating relation; closes transitively.

        ``covers`` may contain redundant (non-cover) pairs, they are
        absorbed by the closure.  Raises CycleDetected when the generated
        relation is cyclic and UnknownElement for labels outside the
        ground set.
        """
        labels = tuple(labels)
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise DuplicateLabel(f"label {lab!r} appears twice")
            index[lab] = i
        n = len(labels)
        rel = np.zeros((n, n), dtype=bool)
        for lo, hi in covers:
            if lo not in index:
                raise UnknownElement(f"unknown element {lo!r} in cover")
            if hi not in index:
                raise UnknownElement(f"unknown element {hi!r} in cover")
            rel[index[lo], index[hi]] = True
        closed = transitive_closure(rel)
        if closed.diagonal().any():
            raise CycleDetected("cover relation generates a cycle")
        return cls(labels, closed)

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        """Inverse of :meth:`to_dict`."""
        return cls.from_covers(data["labels"], [tuple(c) for c in data["covers"]])

    def to_dict(self) -> dict:
        """JSON-ready form: labels plus the cover relation."""
        return {
            "labels": list(self.labels),
            "covers": [list(c) for c in self.covers],
        }

    # -- basic queries -----------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, x: Label) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def less(self, u: Label, v: Label) -> bool:
        """True when u is strictly below v."""
        return bool(self.lt[self.index(u), self.index(v)])

    def comparable(self, u: Label, v: Label) -> bool:
        i, j = self.index(u), self.index(v)
        return bool(self.lt[i, j] or self.lt[j, i])

    @cached_property
    def covers(self) -> tuple[tuple[Label, Label], ...]:
        red = transitive_reduction(self.lt)
        pairs = np.argwhere(red)
        return tuple(
            (self.labels[i], self.labels[j]) for i, j in pairs.tolist()
        )

    @cached_property
    def _pred_masks(self) -> tuple[int, ...]:
        """Bitmask of strict predecessors per element, for lattice sweeps."""
        masks = []
        for j in range(self.n):
            m = 0
            for i in np.flatnonzero(self.lt[:, j]).tolist():
                m |= 1 << i
            masks.append(m)
        return tuple(masks)

    @cached_property
    def _succ_masks(self) -> tuple[int, ...]:
        masks = []
        for i in range(self.n):
            m = 0
            for j in np.flatnonzero(self.lt[i]).tolist():
                m |= 1 << j
            masks.append(m)
        return tuple(masks)

    @cached_property
    def _incomp_masks(self) -> tuple[int, ...]:
        """Bitmask of elements incomparable to each element (self excluded)."""
        comp = self.lt | self.lt.T
        masks = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if j != i and not comp[i, j]:
                    m |= 1 << j
            masks.append(m)
        return tuple(masks)

    def is_chain(self) -> bool:
        """True when every pair of elements is comparable."""
        comp = self.lt | self.lt.T
        np.fill_diagonal(comp, True)
        return bool(comp.all())

    def is_antichain(self) -> bool:
        return not self.lt.any()

    # -- derived posets ----------------------------------------------

    def dual(self) -> "Poset":
        """Same elements with all relations reversed."""
        return Poset(self.labels, self.lt.T)

    def subposet(self, keep: Iterable[Label]) -> "Poset":
        """Induced subposet; element order follows the parent poset."""
        want = {self.index(x) for x in keep}
        idx = [i for i in range(self.n) if i in want]
        sub = self.lt[np.ix_(idx, idx)]
        return Poset([self.labels[i] for i in idx], sub)

    def incomparables(self, x: Label) -> tuple[Label, ...]:
        """All elements incomparable to x, in ground-set order."""
        m = self._incomp_masks[self.index(x)]
        return tuple(self.labels[i] for i in _bits(m))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.lt, other.lt)

    def __hash__(self) -> int:
        return hash((self.labels, self.lt.tobytes()))

    def __repr__(self) -> str:
        return f"Poset({self.n} elements, {len(self.covers)} covers)"

    def lattice(self, budget: int | None = None):
        """Ideal lattice of this poset (cached). See :mod:`linext.lattice`."""
        from .lattice import build_lattice

        return build_lattice(self, budget)


def disjoint_sum(p: Poset, q: Poset) -> Poset:
    """Disjoint union with no relations across the parts.

    Colliding labels on the right side are renamed by appending primes
    until unique.
    """
    taken = set(p.labels)
    right = []
    for lab in q.labels:
        new = lab
        while new in taken:
            new = new + "'"
        taken.add(new)
        right.append(new)
    n1, n2 = p.n, q.n
    lt = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    lt[:n1, :n1] = p.lt
    lt[n1:, n1:] = q.lt
    return Poset(list(p.labels) + right, lt)


def _bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# -- width and incomparability -----------------------------------------


@dataclass(frozen=True)
class ComparabilityProfile:
    """Incomparability statistics plus a maximum-antichain witness."""

    incomparables: dict[Label, tuple[Label, ...]]
    counts: dict[Label, int]
    max_count: int
    width: int
    antichain: tuple[Label, ...]


def _max_bipartite_matching(adj: list[list[int]], n: int) -> list[int]:
    """Kuhn's augmenting-path matching; returns match_right (-1 = free)."""
    match_right = [-1] * n

    def try_augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or try_augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    for u in range(n):
        try_augment(u, [False] * n)
    return match_right


def comparability_profile(p: Poset) -> ComparabilityProfile:
    """Incomparable sets, their sizes, the width, and a maximum antichain.

    Width is computed through a minimum chain cover (maximum bipartite
    matching on the comparability digraph); the antichain witness follows
    from the matching's minimum vertex cover.
    """
    n = p.n
    adj = [list(_bits(p._succ_masks[i])) for i in range(n)]
    match_right = _max_bipartite_matching(adj, n)
    matched_pairs = sum(1 for v in match_right if v != -1)
    width = n - matched_pairs

    # Alternating reachability from unmatched left vertices gives the
    # minimum vertex cover; elements untouched by it form the antichain.
    match_left = [-1] * n
    for v, u in enumerate(match_right):
        if u != -1:
            match_left[u] = v
    visited_left = [False] * n
    visited_right = [False] * n
    stack = [u for u in range(n) if match_left[u] == -1]
    for u in stack:
        visited_left[u] = True
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not visited_right[v]:
                visited_right[v] = True
                w = match_right[v]
                if w != -1 and not visited_left[w]:
                    visited_left[w] = True
                    stack.append(w)
    antichain = tuple(
        p.labels[i] for i in range(n) if visited_left[i] and not visited_right[i]
    )
    assert len(antichain) == width, "matching and antichain witness disagree"

    incomp = {lab: p.incomparables(lab) for lab in p.labels}
    counts = {lab: len(v) for lab, v in incomp.items()}
    max_count = max(counts.values(), default=0)
    return ComparabilityProfile(incomp, counts, max_count, width, antichain)


# -- maximum incomparable pairs -----------------------------------------


@dataclass(frozen=True)
class IncomparablePair:
    """Disjoint sets A, B with every cross pair incomparable.

    Normalized so ``len(b) >= len(a)``.  ``mu`` is a certified lower bound
    on how close ``product`` comes to the best achievable product: exactly
    1 in exhaustive mode, and ``product / bound`` with a cheap upper bound
    in greedy mode.
    """

    a: tuple[Label, ...]
    b: tuple[Label, ...]
    product: int
    mu: Fraction


def _pair_key(n_a: int, n_b: int, a_mask: int, b_mask: int):
    """Sort key: max product, then larger second side, then lexicographic."""
    if (n_b, -n_a) < (n_a, -n_b):
        n_a, n_b, a_mask, b_mask = n_b, n_a, b_mask, a_mask
    return (-n_a * n_b, -n_b, sorted(_bits(a_mask)), sorted(_bits(b_mask)))


def max_incomparable_pair(
    p: Poset, mode: str = "exact", limit: int = EXACT_PAIR_SEARCH_LIMIT
) -> IncomparablePair:
    """Best pair of disjoint sets with all cross pairs incomparable.

    ``mode="exact"`` (allowed up to ``limit`` elements) maximizes
    ``|A|*|B|`` by branch and bound over subsets A, pairing each A with
    every element incomparable to all of it.  ``mode="greedy"`` seeds A
    with an element of maximum incomparability and grows it while the
    product improves, which guarantees a product of at least max pi(x).
    """
    if p.is_chain():
        raise NotApplicable("every pair of elements is comparable")
    n = p.n
    inc = p._incomp_masks
    full = (1 << n) - 1

    if mode == "greedy":
        seed = max(range(n), key=lambda i: (bin(inc[i]).count("1"), -i))
        a_mask = 1 << seed
        cand = inc[seed]
        while True:
            b_mask = cand & ~a_mask
            best_gain = None
            current = bin(a_mask).count("1") * bin(b_mask).count("1")
            for z in _bits(full & ~a_mask):
                nc = cand & inc[z]
                na = a_mask | (1 << z)
                prod = bin(na).count("1") * bin(nc & ~na).count("1")
                if prod > current and (best_gain is None or prod > best_gain[0]):
                    best_gain = (prod, z, nc)
            if best_gain is None:
                break
            _, z, cand = best_gain
            a_mask |= 1 << z
        b_mask = cand & ~a_mask
        best = (a_mask, b_mask)
        profile_max = max(bin(m).count("1") for m in inc)
        bound = min(profile_max * profile_max, (n * n) // 4)
        product = bin(best[0]).count("1") * bin(best[1]).count("1")
        mu = Fraction(product, max(bound, product))
    elif mode == "exact":
        if n > limit:
            raise NotApplicable(
                f"exhaustive pair search limited to {limit} elements (got {n})"
            )
        best = None
        best_key = None

        def consider(a_mask: int, cand: int):
            nonlocal best, best_key
            b_mask = cand & ~a_mask
            if not a_mask or not b_mask:
                return
            key = _pair_key(
                bin(a_mask).count("1"), bin(b_mask).count("1"), a_mask, b_mask
            )
            if best_key is None or key < best_key:
                best_key = key
                best = (a_mask, b_mask)

        def search(idx: int, a_mask: int, n_a: int, cand: int):
            if best_key is not None:
                remaining = n - idx
                if (n_a + remaining) * bin(cand).count("1") < -best_key[0]:
                    return
            if idx == n:
                return
            # include idx in A; useless once no candidate partner survives
            nc = cand & inc[idx]
            if nc:
                na_mask = a_mask | (1 << idx)
                consider(na_mask, nc)
                search(idx + 1, na_mask, n_a + 1, nc)
            # skip idx
            search(idx + 1, a_mask, n_a, cand)

        search(0, 0, 0, full)
        assert best is not None  # non-chain ensures some incomparable pair
        product = bin(best[0]).count("1") * bin(best[1]).count("1")
        mu = Fraction(1)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    a_mask, b_mask = best
    n_a, n_b = bin(a_mask).count("1"), bin(b_mask).count("1")
    if (n_b, -n_a) < (n_a, -n_b):
        a_mask, b_mask = b_mask, a_mask
    a = tuple(p.labels[i] for i in _bits(a_mask))
    b = tuple(p.labels[i] for i in _bits(b_mask))
    return IncomparablePair(a, b, len(a) * len(b), mu)


# -- grid sets ----------------------------------------------------------


class GridOrderCheck(NamedTuple):
    convex: bool
    ideal: bool
    poset: Poset


def grid_point_label(point: tuple[int, ...]) -> Label:
    return ",".join(str(c) for c in point)


def grid_poset(points: Sequence[tuple[int, ...]]) -> Poset:
    """Poset of integer points under the coordinatewise product order."""
    pts = [tuple(q) for q in points]
    if pts:
        d = len(pts[0])
        for q in pts:
            if len(q) != d:
                raise ArityMismatch("grid points must share one dimension")
            if any(c < 1 for c in q):
                raise DomainError("grid coordinates must be positive")
    if len(set(pts)) != len(pts):
        raise DuplicateLabel("grid points must be distinct")
    pts = sorted(pts)
    n = len(pts)
    lt = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            if a != b and all(x <= y for x, y in zip(a, b)):
                lt[i, j] = True
    return Poset([grid_point_label(q) for q in pts], lt)


def is_convex_in_grid(points: Sequence[tuple[int, ...]]) -> GridOrderCheck:
    """Convexity and ideal tests for a finite set of positive integer points.

    The set is convex when every point of the ambient grid lying strictly
    between two of its points (in the product order) also belongs to it,
    and an ideal when it is closed downward.  Both checks enumerate the
    relevant coordinate boxes, so they are meant for desk-scale sets.
    """
    pts = [tuple(q) for q in points]
    pset = set(pts)
    if len(pset) != len(pts):
        raise DuplicateLabel("grid points must be distinct")
    poset = grid_poset(pts)

    def strictly_below(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    convex = True
    for a in pts:
        for b in pts:
            if not strictly_below(a, b):
                continue
            for mid in itertools.product(*(range(x, y + 1) for x, y in zip(a, b))):
                if mid in pset:
                    continue
                if strictly_below(a, mid) and strictly_below(mid, b):
                    convex = False
                    break
            if not convex:
                break
        if not convex:
            break

    ideal = True
    for b in pts:
        for mid in itertools.product(*(range(1, y + 1) for y in b)):
            if mid != b and mid not in pset:
                ideal = False
                break
        if not ideal:
            break

    return GridOrderCheck(convex, ideal, poset)
