"""Finitely generated permutation groups via a deterministic
Schreier-Sims stabilizer chain.

The chain is a list of levels.  Level i holds a base point, the
generators assigned to levels <= i that fix the bases of levels < i, the
orbit of the base point under those generators, and one explicit
transversal permutation (with its inverse) per orbit point.  Group order
is the exact product of orbit sizes, carried as a Python int, so orders
far beyond 64 bits are fine.

Everything is deterministic: base points are chosen greedily as the
smallest point moved by the generator that opens a level, orbits grow in
a fixed exploration order, and transversal representatives are assigned
write-once.  Schreier generators are sifted incrementally with a
processed-pair memo so no pair is examined twice.
"""

from __future__ import annotations

from random import Random

from .perm import Permutation


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Composition a(b(i)); b applies first."""
    return tuple(map(a.__getitem__, b))


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


class _Level:
    __slots__ = ("base", "gens", "orbit", "orbit_order", "pending", "scanned", "processed")

    def __init__(self, base: int, identity: tuple[int, ...]):
        self.base = base
        self.gens: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        self.orbit = {base: (identity, identity)}  # point -> (u, u^-1), u(base) = point
        self.orbit_order = [base]
        self.pending = [base]
        self.scanned = 0  # gens already applied to every settled orbit point
        self.processed: set[tuple[int, int]] = set()  # (gen index, point) pairs sifted


class _Chain:
    def __init__(self, degree: int):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[_Level] = []

    def extend(self, gens) -> None:
        """Add generators and re-establish the stabilizer-chain invariant."""
        dirty = False
        for g in gens:
            if g == self.identity:
                continue
            residue, stuck = self._sift(g, 0)
            if residue == self.identity:
                continue
            self._ingest(residue, 0, stuck)
            dirty = True
        if dirty:
            self._process()

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def contains(self, g: tuple[int, ...]) -> bool:
        residue, _ = self._sift(g, 0)
        return residue == self.identity

    def sample(self, rng: Random) -> tuple[int, ...]:
        acc = self.identity
        for lvl in self.levels:
            point = lvl.orbit_order[rng.randrange(len(lvl.orbit_order))]
            acc = _mul(acc, lvl.orbit[point][0])
        return acc

    def base_points(self) -> list[int]:
        return [lvl.base for lvl in self.levels]

    def _sift(self, g, start: int):
        """Reduce g by transversal elements; returns (residue, stuck level).

        The residue fixes the bases of all levels before the stuck level.
        Membership holds iff the residue is the identity (stuck == len).
        """
        levels = self.levels
        i = start
        while i < len(levels):
            lvl = levels[i]
            p = g[lvl.base]
            if p != lvl.base:
                entry = lvl.orbit.get(p)
                if entry is None:
                    return g, i
                g = _mul(entry[1], g)
            i += 1
        return g, len(levels)

    def _ingest(self, g, first: int, stuck: int) -> int:
        """Record g as a generator of levels first..stuck, opening a new
        level when g sifted through the whole chain."""
        if stuck == len(self.levels):
            base = min(i for i in range(self.degree) if g[i] != i)
            self.levels.append(_Level(base, self.identity))
        ginv = _inv(g)
        for j in range(first, stuck + 1):
            self.levels[j].gens.append((g, ginv))
        return stuck

    def _process(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            self._close_orbit(i)
            nxt = self._sift_new_pairs(i)
            i = i - 1 if nxt is None else nxt

    def _close_orbit(self, i: int) -> None:
        lvl = self.levels[i]
        gens = lvl.gens
        orbit, order, pending = lvl.orbit, lvl.orbit_order, lvl.pending
        if lvl.scanned < len(gens):
            new = gens[lvl.scanned :]
            lvl.scanned = len(gens)
            for p in list(order):
                up, upinv = orbit[p]
                for g, ginv in new:
                    q = g[p]
                    if q not in orbit:
                        orbit[q] = (_mul(g, up), _mul(upinv, ginv))
                        order.append(q)
                        pending.append(q)
        while pending:
            p = pending.pop()
            up, upinv = orbit[p]
            for g, ginv in gens:
                q = g[p]
                if q not in orbit:
                    orbit[q] = (_mul(g, up), _mul(upinv, ginv))
                    order.append(q)
                    pending.append(q)

    def _sift_new_pairs(self, i: int):
        """Sift unprocessed Schreier generators of level i.  On finding a
        residue, ingest it and return the deepest level it reached."""
        lvl = self.levels[i]
        identity = self.identity
        orbit = lvl.orbit
        processed = lvl.processed
        for gi in range(len(lvl.gens)):
            s, _ = lvl.gens[gi]
            for p in lvl.orbit_order:
                key = (gi, p)
                if key in processed:
                    continue
                processed.add(key)
                up = orbit[p][0]
                uspinv = orbit[s[p]][1]
                sigma = _mul(uspinv, _mul(s, up))
                if sigma == identity:
                    continue
                residue, stuck = self._sift(sigma, i + 1)
                if residue == identity:
                    continue
                return self._ingest(residue, i + 1, stuck)
        return None


class PermGroup:
    """Immutable permutation group with exact order and membership."""

    def __init__(self, generators, degree: int | None = None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree is required for an empty generator list")
            degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators have mixed degrees")
        self.degree = degree
        self.generators = tuple(generators)
        self._chain = _Chain(degree)
        self._chain.extend(g.images for g in generators)
        self._order = self._chain.order()

    def order(self) -> int:
        return self._order

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        return self._chain.contains(p.images)

    __contains__ = contains

    def random_element(self, seed: int) -> Permutation:
        """Uniform element, deterministic per seed: a product of uniformly
        chosen transversal representatives down the chain."""
        return Permutation(self._chain.sample(Random(seed)))

    def base_points(self) -> list[int]:
        return self._chain.base_points()

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self._order}>"


def build_group(generators, degree: int | None = None) -> PermGroup:
    return PermGroup(generators, degree)


def filter_generators(perms, degree: int | None = None) -> list[Permutation]:
    """Reduce a list of permutations to the sublist that incrementally
    generates the same group: each permutation is kept only when the ones
    kept so far do not already produce it."""
    perms = list(perms)
    if degree is None:
        if not perms:
            return []
        degree = perms[0].degree
    chain = _Chain(degree)
    kept: list[Permutation] = []
    for p in perms:
        if p.degree != degree:
            raise ValueError("generators have mixed degrees")
        if not chain.contains(p.images):
            chain.extend([p.images])
            kept.append(p)
    return kept
