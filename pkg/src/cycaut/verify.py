"""Automorphism testing, brute-force automorphism groups for small
degrees, negative sampling, and order-claim verification.

A coordinate permutation is a code automorphism iff it maps every
codeword into the code; by linearity it suffices that the images of the
generator rows are codewords, which is what `is_automorphism` checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from random import Random
from time import perf_counter

from .code import CyclicCode
from .gf2poly import _mod_bits
from .group import PermGroup, build_group, filter_generators
from .perm import Permutation

BRUTE_FORCE_MAX_N = 10


def is_automorphism(code: CyclicCode, p: Permutation) -> bool:
    """True iff p maps the code into itself (generator-row images are
    codewords, which suffices by linearity)."""
    if p.degree != code.length:
        raise ValueError("permutation degree does not match code length")
    g = code.generator.bits
    images = p.images
    row = g
    for _ in range(code.dimension):
        bits = row
        out = 0
        while bits:
            i = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            out |= 1 << images[i]
        if _mod_bits(out, g):
            return False
        row <<= 1
    return True


def brute_force_aut(code: CyclicCode, max_n: int = BRUTE_FORCE_MAX_N) -> list[Permutation]:
    """All automorphisms of the code, by exhausting S_n in lexicographic
    one-line order.  Guarded by max_n; the count grows as n!."""
    n = code.length
    if n > max_n:
        raise ValueError(
            f"length {n} exceeds brute-force cutoff {max_n}; "
            "use a constructive verification instead"
        )
    g = code.generator.bits
    rows = [r.bits for r in code.generator_rows()]
    supports = []
    for r in rows:
        sup = []
        while r:
            sup.append((r & -r).bit_length() - 1)
            r &= r - 1
        supports.append(sup)
    autos = []
    for images in itertools.permutations(range(n)):
        for sup in supports:
            out = 0
            for i in sup:
                out |= 1 << images[i]
            if _mod_bits(out, g):
                break
        else:
            autos.append(Permutation(images))
    # closure sanity: the collected set generates exactly itself
    grp = build_group(filter_generators(autos, n), degree=n)
    assert grp.order() == len(autos), "brute-forced automorphism set is not a group"
    return autos


def sample_outside(code: CyclicCode, group: PermGroup, trials: int, seed: int) -> int:
    """Draw seeded uniform permutations of S_n, discard members of the
    group, and count automorphisms among the rest.  Zero escapes is the
    expected outcome when the group is the full automorphism group."""
    if group.degree != code.length:
        raise ValueError("group degree does not match code length")
    rng = Random(seed)
    n = code.length
    escapes = 0
    for _ in range(trials):
        images = list(range(n))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        if group.contains(p):
            continue
        if is_automorphism(code, p):
            escapes += 1
    return escapes


@dataclass
class VerificationReport:
    """Outcome of one order claim."""

    name: str
    n: int
    generator: str
    expected_order: int
    method: str
    computed_order: int | None = None
    passed: bool = False
    reason: str = ""
    elapsed_ms: float = 0.0
    seed: int | None = None
    sample_trials: int = 0
    sample_escapes: int = 0
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = (
            f"{verdict} {self.name}: n={self.n} g={self.generator} "
            f"expected={self.expected_order} computed={self.computed_order} "
            f"[{self.method}, {self.elapsed_ms:.0f} ms"
        )
        if self.sample_trials:
            line += f", sampled {self.sample_trials} outside (seed {self.seed}), {self.sample_escapes} escapes"
        line += "]"
        if self.reason:
            line += f" -- {self.reason}"
        return line


def verify_claim(
    code: CyclicCode,
    generators: list[tuple[str, Permutation]],
    expected_order: int,
    *,
    name: str = "claim",
    method: str = "construct",
    sampling: tuple[int, int] | None = None,
    exact: bool = True,
) -> VerificationReport:
    """Check an order claim against constructed generators.

    Every generator must individually pass is_automorphism (none is
    trusted by construction).  The stabilizer-chain order must equal the
    expected order, or divide it when exact=False (containment-only
    claims).  When sampling=(trials, seed) is given, that many random
    permutations outside the built group must all fail is_automorphism.
    """
    t0 = perf_counter()
    report = VerificationReport(
        name=name,
        n=code.length,
        generator=str(code.generator),
        expected_order=expected_order,
        method=method,
    )
    if sampling is not None:
        report.seed = sampling[1]
    for label, p in generators:
        if not is_automorphism(code, p):
            report.reason = f"constructed generator {label} = {p} is not an automorphism"
            report.counterexample = str(p)
            report.elapsed_ms = (perf_counter() - t0) * 1000.0
            return report
    grp = build_group([p for _, p in generators], degree=code.length)
    report.computed_order = grp.order()
    if exact:
        if report.computed_order != expected_order:
            report.reason = (
                f"order mismatch: computed {report.computed_order}, expected {expected_order}"
            )
            report.elapsed_ms = (perf_counter() - t0) * 1000.0
            return report
    else:
        if expected_order % report.computed_order != 0:
            report.reason = (
                f"constructed subgroup order {report.computed_order} "
                f"does not divide expected {expected_order}"
            )
            report.elapsed_ms = (perf_counter() - t0) * 1000.0
            return report
    if sampling is not None:
        trials, seed = sampling
        report.sample_trials = trials
        report.sample_escapes = sample_outside(code, grp, trials, seed)
        if report.sample_escapes:
            report.reason = (
                f"{report.sample_escapes} sampled permutations outside the "
                f"constructed group are automorphisms"
            )
            report.elapsed_ms = (perf_counter() - t0) * 1000.0
            return report
    report.passed = True
    report.elapsed_ms = (perf_counter() - t0) * 1000.0
    return report
