"""The ten acceptance criteria, one PASS/FAIL line each."""

import contextlib
import itertools
import sys
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tcell import blacon, enumeration, finmon, semibim
from tcell.blacon import catalog_structure, check_six_conditions, failed_conditions
from tcell.cellcore import (
    find_interchange_counterexample,
    chained_pairs,
    hcompose,
    interchange_candidates,
    is_natural_wrt,
    verify_structure_axioms,
)
from tcell.errors import NotComposable
from tcell.finmon import ElementMap
from tcell.moncell import MonCellStructure, crossed_hom_table, make_cell

from .conftest import M, ctx_of, hom_oracle
from .mutants import MUTATIONS

CASES = [f"case{i}" for i in range(1, 8)]
CONTEXTS = {
    "trivial": ctx_of("trivial"),
    "chain2": ctx_of("chain2"),
    "chain3": ctx_of("chain3"),
    "Z2,Z3": ctx_of("Z2", "Z3"),
}
GROUP_CONTEXTS = {
    "trivial": ctx_of("trivial"),
    "Z2,Z3": ctx_of("Z2", "Z3"),
    "trivial,Z2->S3": ctx_of("S3", sources=["trivial", "Z2"]),
}


@contextlib.contextmanager
def criterion(label, title):
    try:
        yield
    except BaseException:
        sys.__stdout__.write(f"\nACCEPTANCE {label}: FAIL  {title}\n")
        raise
    sys.__stdout__.write(f"\nACCEPTANCE {label}: PASS  {title}\n")


def _chain3_pair():
    c = M("chain3")
    t = ElementMap(c, c, (0, 2, 1))
    f = ElementMap(c, c, (0, 1, 2))
    return c, t, f


def test_1_counterexample_reproduction():
    with criterion("1", "x = y = (t=(0,2,1), f=(0,1,2)) on chain3 is not composable, candidates (0,2,1)/(0,2,2)"):
        start = time.perf_counter()
        ctx = ctx_of("chain3")
        _, t, f = _chain3_pair()
        x = make_cell(t, f)
        for S, cell in [(MonCellStructure(ctx), x),
                        (catalog_structure("case3", ctx), blacon.moncell_to_case3(x))]:
            assert cell in S.cells(t.source, t.target)
            with pytest.raises(NotComposable) as info:
                hcompose(S, cell, cell, ctx)
            first, second = info.value.candidates
            assert first.t.images == (0, 2, 1)
            assert second.t.images == (0, 2, 2)
            assert not is_natural_wrt(S, cell, cell, ctx)
        assert time.perf_counter() - start < 1.0


def test_2_axiom_suite():
    with criterion("2", "structure laws hold for mon-basic, case1-7, maltsev, inverse and both semibimodules"):
        start = time.perf_counter()
        for label, ctx in CONTEXTS.items():
            reps = {"mon-basic": verify_structure_axioms(MonCellStructure(ctx), ctx)}
            for case in CASES:
                reps[case] = verify_structure_axioms(catalog_structure(case, ctx), ctx)
            bad = {k: sorted(r.axioms()) for k, r in reps.items() if not r.ok}
            assert not bad, (label, bad)
        for label, ctx in GROUP_CONTEXTS.items():
            for case in ("maltsev", "inverse"):
                rep = verify_structure_axioms(catalog_structure(case, ctx), ctx)
                assert rep.ok, (label, case, sorted(rep.axioms()))
        for sb in (semibim.and_z2(), semibim.z2_trivial()):
            rep = verify_structure_axioms(semibim.embed(sb))
            assert rep.ok, (sb.M.name, sb.A.name, sorted(rep.axioms()))
        assert time.perf_counter() - start < 60.0


def _hom_count(A, B):
    return sum(hom_oracle(A, B, images) for images in itertools.product(range(B.size), repeat=A.size))


def test_3_discrete_and_codiscrete_counts():
    with criterion("3", "|H_case5(A,B)| = |hom(A,B)| and |H_case4(A,B)| = |hom(A,B)|^2 on every fixture pair"):
        for ctx in [*CONTEXTS.values(), GROUP_CONTEXTS["trivial,Z2->S3"]]:
            discrete = catalog_structure("case5", ctx)
            codiscrete = catalog_structure("case4", ctx)
            for A, B in ctx.pairs():
                n = _hom_count(A, B)
                assert len(discrete.cells(A, B)) == n, (A.name, B.name)
                assert len(codiscrete.cells(A, B)) == n * n, (A.name, B.name)


def test_4_crossed_homomorphisms():
    with criterion("4", "cell membership agrees with the crossed homomorphism identity into Z4 and S3"):
        for target in ("Z4", "S3"):
            for source in ("trivial", "chain2", "chain3", "Z2", "Z3", "Z4", "S3"):
                row = crossed_hom_table(M(source), M(target))
                assert row["disagree"] == 0, row
                assert row["pairs"] == M(target).size ** M(source).size * len(finmon.enumerate_homs(M(source), M(target)))


def test_5_right_cancellation():
    with criterion("5", "every chained pair of mon-basic over {Z2, Z3, S3} is natural"):
        ctx = ctx_of("Z2", "Z3", "S3")
        S = MonCellStructure(ctx)
        checked = 0
        for x, y in chained_pairs(S, ctx):
            assert is_natural_wrt(S, x, y, ctx), (x, y)
            checked += 1
        assert checked > 0
        assert find_interchange_counterexample(S, ctx) is None


def test_6_case3_equals_mon_basic():
    with criterion("6", "(t, f) <-> [f; t; t+f] commutes with all structure operations"):
        for ctx in (ctx_of("chain3"), ctx_of("Z2", "Z3"), ctx_of("chain3", "Z2", "Z3")):
            rep = blacon.equiv_case3_moncell(ctx)
            assert rep.ok, sorted(rep.axioms())


def test_7_semibimodule_round_trip():
    with criterion("7", "recovered action equals act; naturality truth tables agree"):
        for sb in (semibim.and_z2(), semibim.z2_trivial()):
            S = semibim.embed(sb)
            gen = semibim.recover(semibim.canonical_splitting(S))
            act = semibim.recovered_act(sb, gen)
            n, k = sb.M.size, sb.A.size
            assert set(act) == set(itertools.product(range(n), range(k), range(n)))
            assert all(act[key] == sb.act(*key) for key in act)
            cells = S.cells(sb.M, sb.M)
            for x, y in itertools.product(cells, repeat=2):
                assert semibim.sb_natural_wrt(sb, x, y) == is_natural_wrt(S, x, y)


def _pi2_report():
    ctx = ctx_of("chain2")
    fam = blacon.catalog("codiscrete-pi2")
    return check_six_conditions(fam.assignment, fam, ctx)


def test_8_pi2_fails_exactly_condition_5():
    # Open question: the candidate also breaks condition (6); see the decisions ledger.
    with criterion("8", "pi_2 co-discrete candidate fails exactly condition (5) on {chain2}"):
        assert failed_conditions(_pi2_report()) == {"cond5"}


def test_8_pi2_condition_5_witness():
    with criterion("8 (partial)", "pi_2 candidate fails condition (5) with a t != f witness"):
        rep = _pi2_report()
        assert "cond5" in failed_conditions(rep)
        right = [v.witness["x"] for v in rep.violations if v.axiom == "cond5" and v.witness["side"] == "m<t, f, e f>"]
        left = [v.witness["x"] for v in rep.violations if v.axiom == "cond5" and v.witness["side"] == "m<e g, g, t>"]
        # pi_2 returns the middle entry, so m<t, f, e f> = t needs t = f and m<e g, g, t> = t needs t = g
        assert right and all(x.t != x.dom for x in right)
        assert left and all(x.t != x.cod for x in left)


def test_8_catalog_passes_six_conditions():
    with criterion("8 (partial)", "every catalog case passes all six conditions on {chain2}"):
        ctx = ctx_of("chain2")
        for case in [*CASES, "discrete"]:
            fam = blacon.catalog(case)
            rep = check_six_conditions(fam.assignment, fam, ctx)
            assert rep.ok, (case, sorted(rep.axioms()))
        for case in ("maltsev", "inverse"):
            fam = blacon.catalog(case)
            rep = check_six_conditions(fam.assignment, fam, ctx_of("Z2", "Z3"))
            assert rep.ok, (case, sorted(rep.axioms()))


def test_9_enumeration_pinned_and_deterministic():
    with criterion("9", "enum_bla counts match pinned constants across repeated and partitioned runs"):
        start = time.perf_counter()
        pinned = enumeration.pinned_counts()["enum_bla"]
        assert len(enumeration.enum_bla(M("trivial"))) == 1 == pinned["trivial"]
        for name in ("chain2", "Z2"):
            runs = [enumeration.enum_bla(M(name)), enumeration.enum_bla(M(name)),
                    enumeration.enum_bla_partitioned(M(name), 5)]
            prints = [[enumeration.bla_fingerprint(b) for b in run] for run in runs]
            assert prints[0] == prints[1] == prints[2]
            assert len(prints[0]) == pinned[name]
        assert time.perf_counter() - start < 30.0


MUTATION_BASES = {
    "mon-basic": lambda ctx: MonCellStructure(ctx),
    "case2": lambda ctx: catalog_structure("case2", ctx),
    "case3": lambda ctx: catalog_structure("case3", ctx),
    "case7": lambda ctx: catalog_structure("case7", ctx),
}
_CHAIN3 = ctx_of("chain3")
_BASES = {k: make(_CHAIN3) for k, make in MUTATION_BASES.items()}


@settings(max_examples=24, deadline=None, derandomize=True)
@given(mutation=st.sampled_from(sorted(MUTATIONS)), base=st.sampled_from(sorted(MUTATION_BASES)))
def _mutation_case(mutation, base):
    cls, axiom = MUTATIONS[mutation]
    rep = verify_structure_axioms(cls(_BASES[base]), _CHAIN3, cap=5)
    assert not rep.ok
    assert axiom in rep.axioms(), (mutation, base, sorted(rep.axioms()))


def test_10_mutation_sensitivity():
    with criterion("10", "each single-law corruption is reported under its own axiom id"):
        for base in _BASES.values():
            assert verify_structure_axioms(base, _CHAIN3).ok
        _mutation_case()
        for mutation, base in itertools.product(sorted(MUTATIONS), sorted(MUTATION_BASES)):
            _mutation_case.hypothesis.inner_test(mutation=mutation, base=base)
