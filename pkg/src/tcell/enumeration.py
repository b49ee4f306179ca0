"""Exhaustive searches: bla structures on tiny carriers and per-pair cell censuses."""

from __future__ import annotations

import itertools
import json
import os
from importlib import resources
from typing import Iterable, Iterator

from . import blacon
from .blacon import BlaAssignment, BlaStructure, CellFamily
from .cellcore import CellStructure, MonoidCategory, interchange_candidates
from .errors import BlaError, TooLarge
from .finmon import FinMonoid

EXHAUSTIVE_LIMIT = 2


def _leading(B: FinMonoid) -> list[tuple[tuple[int, ...], tuple]]:
    """(e, R) pairs in search order: e lexicographic, then R by bitmask over sorted B^3."""
    n = B.size
    triples = list(itertools.product(range(n), repeat=3))
    out = []
    for e in itertools.product(range(n), repeat=n):
        for mask in range(1 << len(triples)):
            R = tuple(t for i, t in enumerate(triples) if mask >> i & 1)
            out.append((e, R))
    return out


def _closed(B: FinMonoid, R: frozenset, e) -> bool:
    n = B.size
    if any((e[b], b, e[b]) not in R for b in range(n)):
        return False
    for b1, b2, b3 in itertools.product(range(n), repeat=3):
        if (b1, b2, e[b2]) in R and (e[b2], b2, b3) in R and (b1, b2, b3) not in R:
            return False
    return True


def _block(B: FinMonoid, part: int, parts: int) -> list:
    if not 0 <= part < parts:
        raise ValueError(f"part {part} is not in range for {parts} parts")
    lead = _leading(B)
    size = -(-len(lead) // parts)
    return lead[part * size:(part + 1) * size]


def bla_candidates(B: FinMonoid, part: int = 0, parts: int = 1) -> Iterator[tuple]:
    """Every (R, m, e) candidate in deterministic order, restricted to one contiguous block.

    Blocks split the (e, R) leading coordinates into ``parts`` contiguous runs, so
    concatenating the blocks in order reproduces the full sequence.
    """
    for e, R in _block(B, part, parts):
        for values in itertools.product(range(B.size), repeat=len(R)):
            yield R, dict(zip(R, values)), e


def enum_bla(B: FinMonoid, candidates: Iterable[tuple] | None = None,
             part: int = 0, parts: int = 1) -> list[BlaStructure]:
    """All valid bla structures on B.

    Without ``candidates`` the search is exhaustive and needs |B| <= 2; larger
    carriers must pass an explicit candidate family of (R, m, e) triples.
    """
    if candidates is None:
        if B.size > EXHAUSTIVE_LIMIT:
            raise TooLarge(f"{B.name} has {B.size} elements; exhaustive search needs at most {EXHAUSTIVE_LIMIT}")
        return list(_exhaustive(B, part, parts))
    out = []
    for R, m, e in candidates:
        try:
            out.append(blacon.validate_bla(B, R, m, e))
        except BlaError:
            continue
    return out


def _exhaustive(B: FinMonoid, part: int, parts: int) -> Iterator[BlaStructure]:
    # the closure conditions only involve (R, e), so m is enumerated only for survivors
    for e, R in _block(B, part, parts):
        Rs = frozenset(R)
        if not _closed(B, Rs, e):
            continue
        for values in itertools.product(range(B.size), repeat=len(R)):
            yield BlaStructure(B, Rs, dict(zip(R, values)), e, "enumerated")


def enum_bla_partitioned(B: FinMonoid, parts: int) -> list[BlaStructure]:
    out = []
    for p in range(parts):
        out.extend(enum_bla(B, part=p, parts=parts))
    return out


def bla_fingerprint(bla: BlaStructure) -> tuple:
    R = tuple(sorted(bla.R))
    return bla.e, R, tuple(bla.m[r] for r in R)


# --------------------------------------------------------------------------
# census


def count_cells(S: CellStructure, A, B) -> int:
    return len(S.cells(A, B))


def census_structure(S: CellStructure, ctx: MonoidCategory) -> dict:
    """Per (A, B): cell count, natural cells, and chained pairs (x: A -> B, y: X -> A) failing naturality."""
    rows = []
    for A, B in ctx.pairs():
        xs = S.cells(A, B)
        natural = 0
        failures = 0
        for x in xs:
            ok = True
            if A in ctx.objects:
                for X in ctx.sources:
                    for y in S.cells(X, A):
                        first, second = interchange_candidates(S, x, y, ctx)
                        if first != second:
                            ok = False
                            failures += 1
            natural += ok
        rows.append({"A": A.name, "B": B.name, "cells": len(xs), "natural": natural, "nat_fail_pairs": failures})
    return {"pairs": rows}


def census(assign: BlaAssignment, family: CellFamily, ctx: MonoidCategory) -> dict:
    return census_structure(blacon.build_structure(assign, family, ctx), ctx)


# --------------------------------------------------------------------------
# pinned regression constants


def fixtures_path() -> str:
    env = os.environ.get("TCELL_FIXTURES")
    if env:
        return env
    return str(resources.files("tcell") / "data" / "pinned_counts.json")


def pinned_counts(path: str | None = None) -> dict:
    with open(path or fixtures_path()) as fh:
        return json.load(fh)
