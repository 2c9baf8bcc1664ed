"""Permutations on coordinate sets with cycle-notation I/O.

Coordinates are 0-based internally; all cycle notation is 1-based.
Composition is (a * b)(i) = a(b(i)), i.e. b applies first.  When acting
on words, the bit at coordinate i moves to coordinate p(i), which makes
the full cycle (1,2,...,n) exactly the right cyclic shift.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection on {0, ..., degree-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images are not a permutation")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @staticmethod
    def from_cycles(text: str, degree: int) -> Permutation:
        return parse_cycles(text, degree)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition self(other(i)); other applies first."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        img = self.images
        return Permutation(tuple(map(img.__getitem__, other.images)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> Permutation:
        if e < 0:
            return self.inverse() ** (-e)
        acc = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def apply_to_bits(self, bits: int) -> int:
        """Move the bit at coordinate i to coordinate images[i]."""
        out = 0
        img = self.images
        while bits:
            i = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            out |= 1 << img[i]
        return out

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({format_cycles(self)!r}, {self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(i) = a(b(i))."""
    return a * b


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles in 1-based notation; "()" is the identity."""
    s = "".join(text.split())
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    if not s:
        raise ValueError("empty permutation text")
    while pos < len(s):
        m = _CYCLE_RE.match(s, pos)
        if not m:
            raise ValueError(f"bad cycle notation near {s[pos:]!r}")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        try:
            points = [int(t) for t in body.split(",")]
        except ValueError:
            raise ValueError(f"bad cycle {m.group(0)!r}") from None
        for pt in points:
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} out of range 1..{degree}")
            if pt - 1 in seen:
                raise ValueError(f"repeated point {pt}")
            seen.add(pt - 1)
        for a, b in zip(points, points[1:]):
            images[a - 1] = b - 1
        images[points[-1] - 1] = points[0] - 1
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    """Disjoint cycles sorted by smallest moved point, fixed points
    omitted, identity rendered as "()".  1-based, no spaces."""
    img = p.images
    seen: set[int] = set()
    out = []
    for i in range(len(img)):
        if i in seen or img[i] == i:
            continue
        cycle = [i]
        j = img[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = img[j]
        out.append("(" + ",".join(str(c + 1) for c in cycle) + ")")
    return "".join(out) if out else "()"
