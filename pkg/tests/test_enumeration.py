import itertools
import json

import pytest

from tcell import blacon, enumeration, semibim
from tcell.blacon import validate_bla
from tcell.cellcore import DiscreteStructure
from tcell.enumeration import bla_fingerprint, census, count_cells, enum_bla, enum_bla_partitioned
from tcell.errors import BlaError, TooLarge
from tcell.moncell import MonCellStructure

from .conftest import M, ctx_of


def _naive_count(B):
    """Count (R, m, e) by scanning every subset of B^3 and every e with direct rule checks."""
    n = B.size
    triples = list(itertools.product(range(n), repeat=3))
    total = 0
    for e in itertools.product(range(n), repeat=n):
        for bits in itertools.product([False, True], repeat=len(triples)):
            R = {t for t, keep in zip(triples, bits) if keep}
            ok = all((e[x], x, e[x]) in R for x in range(n))
            ok = ok and all((x, y, z) in R for x, y, z in triples
                            if (x, y, e[y]) in R and (e[y], y, z) in R)
            if ok:
                total += n ** len(R)
    return total


def test_trivial_has_one():
    (only,) = enum_bla(M("trivial"))
    assert only.R == frozenset({(0, 0, 0)}) and only.m == {(0, 0, 0): 0} and only.e == (0,)


@pytest.mark.parametrize("name", ["chain2", "Z2"])
def test_counts_match_pinned_and_oracle(name):
    pinned = enumeration.pinned_counts()["enum_bla"][name]
    found = enum_bla(M(name))
    assert len(found) == pinned == _naive_count(M(name))


def test_every_candidate_classified_correctly():
    B = M("chain2")
    accepted = {bla_fingerprint(b) for b in enum_bla(B)}
    seen = 0
    for R, m, e in enumeration.bla_candidates(B):
        key = (e, tuple(sorted(R)), tuple(m[r] for r in sorted(R)))
        try:
            validate_bla(B, R, m, e)
            valid = True
        except BlaError:
            valid = False
        assert valid == (key in accepted)
        seen += 1
    assert seen == 4 * 3 ** 8


@pytest.mark.parametrize("parts", [1, 2, 3, 7, 64])
def test_partitioned_runs_concatenate(parts):
    whole = [bla_fingerprint(b) for b in enum_bla(M("Z2"))]
    split = [bla_fingerprint(b) for b in enum_bla_partitioned(M("Z2"), parts)]
    assert split == whole


def test_repeated_runs_identical():
    a = [bla_fingerprint(b) for b in enum_bla(M("chain2"))]
    b = [bla_fingerprint(b) for b in enum_bla(M("chain2"))]
    assert a == b


def test_bad_partition():
    with pytest.raises(ValueError):
        enum_bla(M("Z2"), part=3, parts=3)


def test_too_large_without_restriction():
    with pytest.raises(TooLarge):
        enum_bla(M("chain3"))
    B = M("chain3")
    full = list(itertools.product(range(3), repeat=3))
    candidates = [
        (full, {r: B.op(r[0], r[2]) for r in full}, (0, 0, 0)),
        ([(0, 0, 0)], {(0, 0, 0): 0}, (0, 0, 0)),
    ]
    assert len(enum_bla(B, candidates=candidates)) == 1


def test_census_examples():
    ctx = ctx_of("chain3")
    rows = {}
    for case in ["case5", "case3", "case4"]:
        fam = blacon.catalog(case)
        (row,) = census(fam.assignment, fam, ctx)["pairs"]
        rows[case] = row
    assert rows["case5"] == {"A": "chain3", "B": "chain3", "cells": 6, "natural": 6, "nat_fail_pairs": 0}
    assert rows["case3"]["nat_fail_pairs"] >= 1
    assert rows["case3"]["nat_fail_pairs"] == enumeration.pinned_counts()["naturality_failures"]["mon-basic/chain3"]
    assert rows["case4"]["cells"] == 36


def test_census_matches_mon_basic():
    ctx = ctx_of("chain3")
    fam = blacon.catalog("case3")
    assert census(fam.assignment, fam, ctx) == enumeration.census_structure(MonCellStructure(ctx), ctx)


def test_census_json_is_stable():
    ctx = ctx_of("chain2", "Z2")
    fam = blacon.catalog("case6")
    a = json.dumps(census(fam.assignment, fam, ctx))
    b = json.dumps(census(fam.assignment, fam, ctx))
    assert a == b


def test_count_cells_examples():
    c = M("chain3")
    assert count_cells(DiscreteStructure(ctx_of("chain3")), c, c) == 6
    z = M("Z2")
    assert count_cells(semibim.embed(semibim.trivial_fiber(z)), z, z) == 4
    pinned = enumeration.pinned_counts()["mon_cells"]
    for name in ["trivial", "chain2", "chain3", "Z2", "Z3"]:
        A = M(name)
        assert count_cells(MonCellStructure(ctx_of(name)), A, A) == pinned[name]


def test_catalog_counts_pinned():
    pinned = enumeration.pinned_counts()["catalog_cells"]["chain2"]
    ctx = ctx_of("chain2")
    B = M("chain2")
    for case, n in pinned.items():
        assert count_cells(blacon.catalog_structure(case, ctx), B, B) == n


def test_fixtures_env_override(tmp_path, monkeypatch):
    path = tmp_path / "pins.json"
    path.write_text(json.dumps({"enum_bla": {"chain2": 1}}))
    monkeypatch.setenv("TCELL_FIXTURES", str(path))
    assert enumeration.fixtures_path() == str(path)
    assert enumeration.pinned_counts() == {"enum_bla": {"chain2": 1}}
