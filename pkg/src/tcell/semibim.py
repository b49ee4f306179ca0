"""Semibimodules over a monoid and 2-cell structures on a one-object category.

A semibimodule is a monoid ``A`` with an action ``act(u, a, v)`` of M on both
sides.  It gives a 2-cell structure on M (seen as a one-object category) with
cells ``(g, a, f)``: dom ``f``, cod ``g``, middle ``a``.  Going back, a one-object
structure whose zero cells split through the identity morphism yields a
generalized semibimodule ``(A, 0, rho, mu)`` on the endo-cells of ``1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping

from . import finmon
from .cellcore import Cell, CellStructure, OneObjectCategory, cell_key, encode
from .errors import LawViolated, NotBijective, SemibimoduleError, SplittingInvalid
from .finmon import FinMonoid

SEMIBIMODULE_LAWS = ("act_zero", "act_additive", "act_functorial", "act_unit")
SPLITTING_LAWS = ("split_zero", "split_qk", "split_decompose", "split_kq_zero", "split_kq_plus")
GENERALIZED_LAWS = ("mu_zero", "mu_rho", "mu_functorial", "mu_unit", "rho_unit", "rho_assoc")


@dataclass(frozen=True, eq=False)
class Semibimodule:
    M: FinMonoid
    A: FinMonoid
    table: tuple  # table[u][a][v]

    def act(self, u: int, a: int, v: int) -> int:
        return self.table[u][a][v]

    def to_json(self) -> dict:
        rows = [[u, a, v, self.table[u][a][v]]
                for u, a, v in itertools.product(range(self.M.size), range(self.A.size), range(self.M.size))]
        return {"M": self.M.name, "A": self.A.name, "act": rows}


def _tabulate(M: FinMonoid, A: FinMonoid, act) -> tuple:
    if callable(act):
        get = act
    elif isinstance(act, Mapping):
        def get(u, a, v):
            return act[(u, a, v)]
    else:
        def get(u, a, v):
            return act[u][a][v]
    try:
        table = tuple(tuple(tuple(get(u, a, v) for v in range(M.size)) for a in range(A.size))
                      for u in range(M.size))
    except (KeyError, IndexError) as exc:
        raise SemibimoduleError("act_total", (str(exc),)) from None
    for u, a, v in itertools.product(range(M.size), range(A.size), range(M.size)):
        r = table[u][a][v]
        if not (isinstance(r, int) and 0 <= r < A.size):
            raise SemibimoduleError("act_total", (u, a, v))
    return table


def semibimodule_violations(M: FinMonoid, A: FinMonoid, table) -> list[tuple[str, tuple]]:
    """Every failed law with its witness, in law order."""
    out = []
    Mm, Ao = M.table, A.table
    act = table
    ms, as_ = range(M.size), range(A.size)
    for u, v in itertools.product(ms, ms):
        if act[u][A.identity][v] != A.identity:
            out.append(("act_zero", (u, v)))
    for u, a2, a1, v in itertools.product(ms, as_, as_, ms):
        if Ao[act[u][a2][v]][act[u][a1][v]] != act[u][Ao[a2][a1]][v]:
            out.append(("act_additive", (u, a2, a1, v)))
    for u2, u, a, v, v2 in itertools.product(ms, ms, as_, ms, ms):
        if act[u2][act[u][a][v]][v2] != act[Mm[u2][u]][a][Mm[v][v2]]:
            out.append(("act_functorial", (u2, u, a, v, v2)))
    for a in as_:
        if act[M.identity][a][M.identity] != a:
            out.append(("act_unit", (a,)))
    return out


def validate_semibimodule(M: FinMonoid, A: FinMonoid, act) -> Semibimodule:
    """``act`` may be a callable, a dict keyed by (u, a, v) or a nested table."""
    table = _tabulate(M, A, act)
    bad = semibimodule_violations(M, A, table)
    if bad:
        law, witness = bad[0]
        raise SemibimoduleError(law, witness)
    return Semibimodule(M, A, table)


def semibimodule_from_json(doc: dict, resolve: Callable[[str], FinMonoid] = finmon.builtin) -> Semibimodule:
    try:
        M, A = resolve(doc["M"]), resolve(doc["A"])
        rows = doc["act"]
    except (KeyError, TypeError) as exc:
        raise SemibimoduleError("format", (f"missing {exc}",)) from None
    act = {}
    for row in rows:
        if len(row) != 4:
            raise SemibimoduleError("format", (row,))
        act[tuple(row[:3])] = row[3]
    return validate_semibimodule(M, A, act)


# --------------------------------------------------------------------------
# fixtures


def and_z2() -> Semibimodule:
    """M = ({0, 1}, *, 1), A = Z2, act(u, a, v) = u a v mod 2."""
    return validate_semibimodule(finmon.builtin("and2"), finmon.builtin("Z2"), lambda u, a, v: (u * a * v) % 2)


def z2_trivial() -> Semibimodule:
    """M = A = Z2 with act(u, a, v) = a."""
    return validate_semibimodule(finmon.builtin("Z2"), finmon.builtin("Z2"), lambda u, a, v: a)


def trivial_fiber(M: FinMonoid) -> Semibimodule:
    return validate_semibimodule(M, finmon.builtin("trivial"), lambda u, a, v: 0)


FIXTURES: dict[str, Callable[[], Semibimodule]] = {
    "and2-z2": and_z2,
    "z2-trivial-action": z2_trivial,
    "z2-trivial-fiber": lambda: trivial_fiber(finmon.builtin("Z2")),
}


# --------------------------------------------------------------------------
# the embedded structure


def one_object_cell(M: FinMonoid, g: int, a, f: int) -> Cell:
    """The cell (g, a, f): f => g."""
    return Cell(M, M, f, a, g)


def _triple(x) -> tuple:
    if isinstance(x, Cell):
        return x.cod, x.t, x.dom
    return tuple(x)


class SemibimoduleStructure(CellStructure):
    """H = M x A x M with the action as whiskering."""

    name = "semibim"

    def __init__(self, sb: Semibimodule):
        self.sb = sb
        self.category = OneObjectCategory(sb.M)
        M = sb.M
        # (dom, payload, cod) order
        self._cells = [one_object_cell(M, g, a, f)
                       for f in range(M.size) for a in range(sb.A.size) for g in range(M.size)]

    def cells(self, A, B):
        return self._cells

    def zero(self, f):
        return one_object_cell(self.sb.M, f, self.sb.A.identity, f)

    def vcompose(self, x2, x1):
        if x2.dom != x1.cod:
            raise SemibimoduleError("chaining", (x2, x1))
        return one_object_cell(self.sb.M, x2.cod, self.sb.A.op(x2.t, x1.t), x1.dom)

    def whisker(self, u, x, v):
        Mt = self.sb.M.table
        return one_object_cell(self.sb.M, Mt[Mt[u][x.cod]][v], self.sb.act(u, x.t, v), Mt[Mt[u][x.dom]][v])


def embed(sb: Semibimodule) -> SemibimoduleStructure:
    return SemibimoduleStructure(sb)


def sb_natural_wrt(sb: Semibimodule, x, y) -> bool:
    """act(1, a, g') + act(f, a', 1) == act(g, a', 1) + act(1, a, f') for x = (g, a, f), y = (g', a', f')."""
    g, a, f = _triple(x)
    g2, a2, f2 = _triple(y)
    one, add = sb.M.identity, sb.A.op
    return add(sb.act(one, a, g2), sb.act(f, a2, one)) == add(sb.act(g, a2, one), sb.act(one, a, f2))


# --------------------------------------------------------------------------
# splitting and recovery


@dataclass
class SplittingData:
    """A one-object structure with the zero cells split through the identity.

    ``zero_lo(g)`` is a cell 1 => g, ``zero_hi(f)`` a cell f => 1, ``q`` sends every
    cell to an endo-cell of 1, and ``k`` includes endo-cells of 1 into H.
    """

    S: CellStructure
    M: FinMonoid
    zero_lo: Callable[[int], Cell]
    zero_hi: Callable[[int], Cell]
    q: Callable[[Cell], Cell]
    k: Callable[[Cell], Cell] = field(default=lambda a: a)

    def cells(self) -> list[Cell]:
        return list(self.S.cells(self.M, self.M))

    def carrier(self) -> list[Cell]:
        one = self.M.identity
        return sorted((x for x in self.cells() if self.S.dom(x) == one and self.S.cod(x) == one), key=cell_key)


def canonical_splitting(S: SemibimoduleStructure) -> SplittingData:
    M, A = S.sb.M, S.sb.A
    one, zero = M.identity, A.identity
    return SplittingData(
        S, M,
        zero_lo=lambda g: one_object_cell(M, g, zero, one),
        zero_hi=lambda f: one_object_cell(M, one, zero, f),
        q=lambda x: one_object_cell(M, one, x.t, one),
    )


@dataclass
class GeneralizedSemibimodule:
    """Recovered data on the carrier of endo-cells of 1.

    Elements of A are indices into ``carrier``; ``mu[(u, a, v)]`` and
    ``rho[(a1, g, a2)]`` are indices too.
    """

    M: FinMonoid
    carrier: list[Cell]
    zero: int
    mu: dict
    rho: dict
    zero_resplits: bool
    resplit_witness: tuple | None = None

    def violations(self) -> list[tuple[str, tuple]]:
        M, mu, rho, z = self.M, self.mu, self.rho, self.zero
        Mt, one = M.table, M.identity
        ms, as_ = range(M.size), range(len(self.carrier))
        out = []
        for u, v in itertools.product(ms, ms):
            if mu[(u, z, v)] != z:
                out.append(("mu_zero", (u, v)))
        for u, a1, g, a2, v in itertools.product(ms, as_, ms, as_, ms):
            if rho[(mu[(u, a1, v)], g, mu[(u, a2, v)])] != mu[(u, rho[(a1, g, a2)], v)]:
                out.append(("mu_rho", (u, a1, g, a2, v)))
        for u2, u, a, v, v2 in itertools.product(ms, ms, as_, ms, ms):
            if mu[(u2, mu[(u, a, v)], v2)] != mu[(Mt[u2][u], a, Mt[v][v2])]:
                out.append(("mu_functorial", (u2, u, a, v, v2)))
        for a in as_:
            if mu[(one, a, one)] != a:
                out.append(("mu_unit", (a,)))
        for a, f in itertools.product(as_, ms):
            if not rho[(a, f, z)] == a == rho[(z, f, a)]:
                out.append(("rho_unit", (a, f)))
        for a1, f, a2, g, a3 in itertools.product(as_, ms, as_, ms, as_):
            if rho[(a1, f, rho[(a2, g, a3)])] != rho[(rho[(a1, f, a2)], g, a3)]:
                out.append(("rho_assoc", (a1, f, a2, g, a3)))
        return out

    def to_json(self) -> dict:
        return {
            "M": self.M.name,
            "carrier": [encode(c) for c in self.carrier],
            "zero": self.zero,
            "mu": [[*k, v] for k, v in sorted(self.mu.items())],
            "rho": [[*k, v] for k, v in sorted(self.rho.items())],
            "zero_resplits": self.zero_resplits,
        }


def splitting_violations(sd: SplittingData) -> list[tuple[str, tuple]]:
    """Every failed splitting law, in law order."""
    S, M = sd.S, sd.M
    cells, carrier = sd.cells(), set(sd.carrier())
    kq = lambda x: sd.k(sd.q(x))  # noqa: E731
    one = M.identity
    out = []
    for f in range(M.size):
        try:
            if S.vcompose(sd.zero_lo(f), sd.zero_hi(f)) != S.zero(f):
                out.append(("split_zero", (f,)))
        except Exception as exc:  # unchained summands are a failure of the same law
            out.append(("split_zero", (f, str(exc))))
    for x in cells:
        if sd.q(x) not in carrier:
            out.append(("split_q_range", (x,)))
    for a in sorted(carrier, key=cell_key):
        if sd.q(sd.k(a)) != a:
            out.append(("split_qk", (a,)))
    for x in cells:
        try:
            y = S.vcompose(sd.zero_lo(S.cod(x)), S.vcompose(kq(x), sd.zero_hi(S.dom(x))))
        except Exception as exc:
            out.append(("split_decompose", (x, str(exc))))
            continue
        if y != x:
            out.append(("split_decompose", (x,)))
    z1 = S.zero(one)
    for g in range(M.size):
        if kq(sd.zero_lo(g)) != z1:
            out.append(("split_kq_zero", ("lo", g)))
        if kq(sd.zero_hi(g)) != z1:
            out.append(("split_kq_zero", ("hi", g)))
    for x in cells:
        for y in cells:
            if S.dom(x) != S.cod(y):
                continue
            if kq(S.vcompose(x, y)) != S.vcompose(kq(x), kq(y)):
                out.append(("split_kq_plus", (x, y)))
    return out


def recover(sd: SplittingData) -> GeneralizedSemibimodule:
    """Check the splitting, the alpha/beta bijection, and rebuild (A, 0, rho, mu).

    Raises SplittingInvalid, NotBijective or LawViolated on the first failure.
    """
    bad = splitting_violations(sd)
    if bad:
        raise SplittingInvalid(*bad[0])
    S, M = sd.S, sd.M
    one = M.identity
    carrier = sd.carrier()
    index = {c: i for i, c in enumerate(carrier)}
    cells = sd.cells()

    def alpha(x):
        return S.cod(x), index[sd.q(x)], S.dom(x)

    def beta(g, a, f):
        return S.vcompose(sd.zero_lo(g), S.vcompose(sd.k(carrier[a]), sd.zero_hi(f)))

    for x in cells:
        if beta(*alpha(x)) != x:
            raise NotBijective("beta_alpha", (x,))
    for g, a, f in itertools.product(range(M.size), range(len(carrier)), range(M.size)):
        if alpha(beta(g, a, f)) != (g, a, f):
            raise NotBijective("alpha_beta", (g, a, f))

    mu = {}
    for u, a, v in itertools.product(range(M.size), range(len(carrier)), range(M.size)):
        mu[(u, a, v)] = index[sd.q(S.whisker(u, sd.k(carrier[a]), v))]
    rho = {}
    for a1, g, a2 in itertools.product(range(len(carrier)), range(M.size), range(len(carrier))):
        cell = S.vcompose(sd.k(carrier[a1]),
                          S.vcompose(sd.zero_hi(g), S.vcompose(sd.zero_lo(g), sd.k(carrier[a2]))))
        if cell not in index:
            raise NotBijective("rho_in_carrier", (a1, g, a2))
        rho[(a1, g, a2)] = index[cell]

    witness = None
    z1 = S.zero(one)
    for f in range(M.size):
        if S.vcompose(sd.zero_hi(f), sd.zero_lo(f)) != z1:
            witness = (f,)
            break
    gen = GeneralizedSemibimodule(M, carrier, index[z1], mu, rho, witness is None, witness)
    bad = gen.violations()
    if bad:
        raise LawViolated(*bad[0])
    return gen


def recovered_act(sb: Semibimodule, gen: GeneralizedSemibimodule) -> dict:
    """mu rewritten on A itself, reading carrier cell (1, a, 1) as a."""
    return {(u, gen.carrier[a].t, v): gen.carrier[r].t for (u, a, v), r in gen.mu.items()}
