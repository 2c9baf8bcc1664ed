"""Verification manifests: a JSON list of order claims, one per entry.

Entry fields:

  name            unique label
  n               code length
  generator       polynomial text, plain or product form "(f1)(f2)^k..."
  expected_order  decimal string (orders routinely exceed 64 bits)
  expected_order_factors
                  optional [[base, exp], ...]; their product must equal
                  expected_order (arithmetic identity of the claim)
  method          "brute" | "construct" | "multiplier" | "containment"
  construction    list of construction records (construct/containment)
  sampling        optional {"trials": int, "seed": int}

Construction records (degree = code length unless noted):

  {"kind": "shift"}
  {"kind": "pair_swap"}
  {"kind": "block_rows", "k": K}
  {"kind": "lifted_column", "k": K, "inner": SOURCE}      inner degree n/K
  {"kind": "interleaved_lift", "rows": [1,2], "inner": SOURCE}
  {"kind": "residue_lift", "rows": R, "at": [a,...], "inner": SOURCE}
  {"kind": "row_permutation", "rows": R, "perms": [cycles,...]}
  {"kind": "multiplier", "a": A}
  {"kind": "multipliers"}                                  all preserving units
  {"kind": "perms", "cycles": [cycles,...]}

SOURCE describes the generators of an inner group on a shorter code:

  {"source": "brute", "n": N, "generator": g}              brute-forced, reduced
  {"source": "shift_multipliers", "n": N, "generator": g}  shift plus multipliers
  {"source": "construct", "n": N, "generator": g, "specs": [...]}   recursive
  {"source": "perms", "degree": N, "cycles": [...]}        explicit list
"""

from __future__ import annotations

import json
import math
import os
from importlib.resources import files
from time import perf_counter

from .code import CyclicCode
from .construct import (
    block_row_generators,
    interleaved_lift,
    lifted_column_perm,
    multiplier,
    multiplier_subgroup,
    pair_swap,
    residue_lift,
    row_permutation,
    shift,
)
from .gf2poly import parse_poly_product
from .group import build_group, filter_generators
from .perm import Permutation, parse_cycles
from .verify import BRUTE_FORCE_MAX_N, VerificationReport, brute_force_aut, verify_claim

MANIFEST_ENV_VAR = "CYCAUT_MANIFEST"
METHODS = ("brute", "construct", "multiplier", "containment")


def default_manifest_path() -> str:
    env = os.environ.get(MANIFEST_ENV_VAR)
    if env:
        return env
    return str(files("cycaut").joinpath("manifests/default.json"))


def extended_manifest_path() -> str:
    return str(files("cycaut").joinpath("manifests/extended.json"))


def load_manifest(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("manifest must be a JSON list of entries")
    names = set()
    for entry in data:
        _validate_entry(entry)
        if entry["name"] in names:
            raise ValueError(f"duplicate manifest entry name {entry['name']!r}")
        names.add(entry["name"])
    return data


def _validate_entry(entry: dict) -> None:
    for key in ("name", "n", "generator", "expected_order", "method"):
        if key not in entry:
            raise ValueError(f"manifest entry missing field {key!r}")
    if entry["method"] not in METHODS:
        raise ValueError(f"unknown method {entry['method']!r}")
    if not str(entry["expected_order"]).isdigit():
        raise ValueError(f"expected_order must be a decimal string: {entry['expected_order']!r}")
    if entry["method"] in ("construct", "containment") and not entry.get("construction"):
        raise ValueError(f"entry {entry['name']!r} needs a construction list")
    try:
        _code_for(entry["n"], entry["generator"])
    except ValueError as exc:
        raise ValueError(f"entry {entry['name']!r}: {exc}") from None


def _code_for(n: int, generator_text: str) -> CyclicCode:
    return CyclicCode(int(n), parse_poly_product(generator_text))


def expand_source(source: dict, cache: dict | None = None) -> list[Permutation]:
    """Generators of an inner group, per the SOURCE records above."""
    kind = source.get("source")
    if kind == "perms":
        degree = int(source["degree"])
        return [parse_cycles(text, degree) for text in source["cycles"]]
    if kind == "brute":
        code = _code_for(source["n"], source["generator"])
        autos = _cached_brute(code, BRUTE_FORCE_MAX_N, cache)
        return filter_generators(autos, code.length)
    if kind == "shift_multipliers":
        code = _code_for(source["n"], source["generator"])
        n = code.length
        units = multiplier_subgroup(code)
        return [shift(n)] + [multiplier(a, n) for a in units if a != 1]
    if kind == "construct":
        code = _code_for(source["n"], source["generator"])
        gens = expand_constructions(code, source["specs"], cache)
        return [p for _, p in gens]
    raise ValueError(f"unknown inner source {kind!r}")


def _cached_brute(code: CyclicCode, max_n: int, cache: dict | None) -> list[Permutation]:
    if cache is None:
        return brute_force_aut(code, max_n)
    key = ("brute", code.length, code.generator.bits)
    if key not in cache:
        cache[key] = brute_force_aut(code, max_n)
    return cache[key]


def expand_constructions(
    code: CyclicCode, specs: list[dict], cache: dict | None = None
) -> list[tuple[str, Permutation]]:
    """Instantiate construction records against a code, returning labeled
    permutations of the code's degree."""
    n = code.length
    out: list[tuple[str, Permutation]] = []
    for idx, spec in enumerate(specs):
        kind = spec.get("kind")
        tag = f"{kind}[{idx}]"
        if kind == "shift":
            out.append((tag, shift(n)))
        elif kind == "pair_swap":
            if n % 2:
                raise ValueError("pair_swap needs an even length")
            out.append((tag, pair_swap(n // 2)))
        elif kind == "block_rows":
            k = int(spec["k"])
            if n % k:
                raise ValueError(f"block_rows: {k} does not divide {n}")
            for j, p in enumerate(block_row_generators(k, n // k)):
                out.append((f"{tag}.{j}", p))
        elif kind == "lifted_column":
            k = int(spec["k"])
            if n % k:
                raise ValueError(f"lifted_column: {k} does not divide {n}")
            inner = expand_source(spec["inner"], cache)
            for j, tau in enumerate(inner):
                if tau.degree != n // k:
                    raise ValueError(
                        f"lifted_column: inner degree {tau.degree}, expected {n // k}"
                    )
                out.append((f"{tag}.{j}", lifted_column_perm(tau, k)))
        elif kind == "interleaved_lift":
            if n % 2:
                raise ValueError("interleaved_lift needs an even length")
            rows = spec.get("rows", [1, 2])
            inner = expand_source(spec["inner"], cache)
            for row in rows:
                for j, sigma in enumerate(inner):
                    if sigma.degree != n // 2:
                        raise ValueError(
                            f"interleaved_lift: inner degree {sigma.degree}, expected {n // 2}"
                        )
                    out.append((f"{tag}.r{row}.{j}", interleaved_lift(sigma, row)))
        elif kind == "residue_lift":
            rows = int(spec["rows"])
            if n % rows:
                raise ValueError(f"residue_lift: {rows} does not divide {n}")
            at = spec.get("at", [1])
            inner = expand_source(spec["inner"], cache)
            for a in at:
                for j, alpha in enumerate(inner):
                    if alpha.degree != n // rows:
                        raise ValueError(
                            f"residue_lift: inner degree {alpha.degree}, expected {n // rows}"
                        )
                    out.append((f"{tag}.a{a}.{j}", residue_lift(alpha, a, rows)))
        elif kind == "row_permutation":
            rows = int(spec["rows"])
            if n % rows:
                raise ValueError(f"row_permutation: {rows} does not divide {n}")
            for j, text in enumerate(spec["perms"]):
                beta = parse_cycles(text, rows)
                out.append((f"{tag}.{j}", row_permutation(beta, n // rows)))
        elif kind == "multiplier":
            out.append((tag, multiplier(int(spec["a"]), n)))
        elif kind == "multipliers":
            for a in multiplier_subgroup(code):
                if a != 1:
                    out.append((f"{tag}.{a}", multiplier(a, n)))
        elif kind == "perms":
            for j, text in enumerate(spec["cycles"]):
                out.append((f"{tag}.{j}", parse_cycles(text, n)))
        else:
            raise ValueError(f"unknown construction kind {kind!r}")
    return out


def run_entry(
    entry: dict,
    *,
    max_brute_n: int = BRUTE_FORCE_MAX_N,
    default_seed: int = 0,
    cache: dict | None = None,
) -> VerificationReport:
    """Verify one manifest entry and return its report."""
    name = entry["name"]
    method = entry["method"]
    expected = int(entry["expected_order"])
    code = _code_for(entry["n"], entry["generator"])

    factors = entry.get("expected_order_factors")
    if factors is not None:
        claimed = math.prod(int(b) ** int(e) for b, e in factors)
        if claimed != expected:
            report = VerificationReport(
                name=name,
                n=code.length,
                generator=str(code.generator),
                expected_order=expected,
                method=method,
                reason=f"expected_order {expected} does not equal the factored form {claimed}",
            )
            return report

    sampling = None
    if entry.get("sampling"):
        sampling = (
            int(entry["sampling"]["trials"]),
            int(entry["sampling"].get("seed", default_seed)),
        )

    if method == "brute":
        t0 = perf_counter()
        autos = _cached_brute(code, max_brute_n, cache)
        report = VerificationReport(
            name=name,
            n=code.length,
            generator=str(code.generator),
            expected_order=expected,
            method=method,
            computed_order=len(autos),
        )
        report.passed = len(autos) == expected
        if not report.passed:
            report.reason = f"brute-force count {len(autos)} != expected {expected}"
        report.elapsed_ms = (perf_counter() - t0) * 1000.0
        return report

    if method == "multiplier":
        t0 = perf_counter()
        n = code.length
        units = multiplier_subgroup(code)
        gens = [shift(n)] + [multiplier(a, n) for a in units if a != 1]
        grp = build_group(gens, degree=n)
        computed = grp.order()
        report = VerificationReport(
            name=name,
            n=n,
            generator=str(code.generator),
            expected_order=expected,
            method=method,
            computed_order=computed,
            details={"units": units},
        )
        report.passed = computed == expected == n * len(units)
        if not report.passed:
            report.reason = (
                f"shift-and-multiplier order {computed} ({len(units)} units) "
                f"!= expected {expected}"
            )
        report.elapsed_ms = (perf_counter() - t0) * 1000.0
        return report

    t0 = perf_counter()
    generators = expand_constructions(code, entry["construction"], cache)
    expansion_ms = (perf_counter() - t0) * 1000.0
    report = verify_claim(
        code,
        generators,
        expected,
        name=name,
        method=method,
        sampling=sampling,
        exact=(method == "construct"),
    )
    report.elapsed_ms += expansion_ms
    return report


def report_record(report: VerificationReport) -> dict:
    """The stable machine-readable record for one entry."""
    return {
        "name": report.name,
        "n": report.n,
        "generator": report.generator,
        "expected_order": str(report.expected_order),
        "computed_order": None if report.computed_order is None else str(report.computed_order),
        "pass": report.passed,
        "elapsed_ms": round(report.elapsed_ms, 3),
        "seed": report.seed,
    }
