"""Finite monoids given by Cayley tables, maps between them, and homomorphisms.

Elements are 0-based indices.  The monoid operation is written additively
(``table[a][b]`` is ``a + b``) even when it is not commutative.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    BadIdentity,
    EndpointMismatch,
    NotAssociative,
    OutOfRange,
)


class FinMonoid:
    """An immutable, validated finite monoid.

    Build instances through :func:`validate_monoid` or one of the generators;
    the constructor itself trusts its input.
    """

    __slots__ = ("name", "size", "identity", "table", "inverse", "_hash")

    def __init__(self, name: str, table: tuple[tuple[int, ...], ...], identity: int,
                 inverse: tuple[int, ...] | None):
        self.name = name
        self.size = len(table)
        self.identity = identity
        self.table = table
        self.inverse = inverse
        self._hash = hash((name, self.size, identity))

    @property
    def is_group(self) -> bool:
        return self.inverse is not None

    @property
    def is_commutative(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.size) for b in range(a))

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def sum(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def neg(self, a: int) -> int:
        if self.inverse is None:
            raise ValueError(f"{self.name} is not a group")
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.size)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinMonoid):
            return NotImplemented
        return (self.name, self.identity, self.table) == (other.name, other.identity, other.table)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinMonoid({self.name!r}, size={self.size})"


def validate_monoid(table: Sequence[Sequence[int]], identity: int, name: str = "custom") -> FinMonoid:
    """Check a Cayley table and return the monoid it defines.

    Raises OutOfRange, BadIdentity or NotAssociative with the first witness found.
    """
    n = len(table)
    if n == 0:
        raise OutOfRange("empty table", ())
    for i, row in enumerate(table):
        if len(row) != n:
            raise OutOfRange(f"row {i} has length {len(row)}, expected {n}", (i,))
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise OutOfRange(f"table[{i}][{j}] = {v!r} is out of range", (i, j))
    if not (isinstance(identity, int) and 0 <= identity < n):
        raise OutOfRange(f"identity {identity!r} is out of range", (identity,))
    t = tuple(tuple(row) for row in table)
    for a in range(n):
        if t[identity][a] != a or t[a][identity] != a:
            raise BadIdentity(f"{identity} is not a two-sided identity at {a}", (a,))
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAssociative(f"({a}+{b})+{c} != {a}+({b}+{c})", (a, b, c))
    inverse = []
    for a in range(n):
        inv = [b for b in range(n) if t[a][b] == identity and t[b][a] == identity]
        if not inv:
            inverse = None
            break
        inverse.append(inv[0])
    return FinMonoid(name, t, identity, tuple(inverse) if inverse is not None else None)


def make_chain(n: int) -> FinMonoid:
    """The chain {0, ..., n-1} under max, with unit 0."""
    if n < 1:
        raise ValueError("chain needs n >= 1")
    return validate_monoid([[max(i, j) for j in range(n)] for i in range(n)], 0, f"chain{n}")


def make_cyclic(n: int) -> FinMonoid:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return validate_monoid([[(i + j) % n for j in range(n)] for i in range(n)], 0, f"Z{n}")


def make_symmetric(n: int) -> FinMonoid:
    """Permutations of {0..n-1} in lexicographic order; ``a + b`` applies b first, then a."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms]
    return validate_monoid(table, 0, f"S{n}")


def make_bool_and() -> FinMonoid:
    """{0, 1} under multiplication; the unit is 1."""
    return validate_monoid([[0, 0], [0, 1]], 1, "and2")


def make_trivial() -> FinMonoid:
    return validate_monoid([[0]], 0, "trivial")


_BUILTIN = re.compile(r"^(chain|Z|S)(\d+)$")


@lru_cache(maxsize=None)
def builtin(name: str) -> FinMonoid:
    """Resolve a builtin name: ``trivial``, ``and2``, ``chain<n>``, ``Z<n>``, ``S<n>``.

    Results are cached so that every caller shares the same instance.
    """
    if name == "trivial":
        return make_trivial()
    if name == "and2":
        return make_bool_and()
    match = _BUILTIN.match(name)
    if match is None:
        raise KeyError(f"unknown builtin monoid {name!r}")
    kind, n = match.group(1), int(match.group(2))
    if kind == "chain":
        return make_chain(n)
    if kind == "Z":
        return make_cyclic(n)
    if n > 4:
        raise KeyError(f"S{n} is too large for exhaustive use")
    return make_symmetric(n)


@dataclass(frozen=True)
class ElementMap:
    """A total map between carriers, stored as its image vector.

    Homomorphisms use the same type; :func:`is_hom` is the membership test.
    """

    source: FinMonoid
    target: FinMonoid
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source.size:
            raise OutOfRange(f"map needs {self.source.size} images, got {len(self.images)}", ())
        for a, b in enumerate(self.images):
            if not 0 <= b < self.target.size:
                raise OutOfRange(f"image of {a} is {b}, outside {self.target.name}", (a, b))

    def __call__(self, a: int) -> int:
        return self.images[a]

    def __repr__(self):
        return f"ElementMap({self.source.name}->{self.target.name}, {self.images})"


Hom = ElementMap


def _trusted(source: FinMonoid, target: FinMonoid, images: tuple[int, ...]) -> ElementMap:
    # skips range validation; callers guarantee images come from target tables
    m = object.__new__(ElementMap)
    object.__setattr__(m, "source", source)
    object.__setattr__(m, "target", target)
    object.__setattr__(m, "images", images)
    return m


def is_hom(A: FinMonoid, B: FinMonoid, images: ElementMap | Sequence[int]) -> bool:
    """True iff the map preserves the unit and the operation."""
    img = images.images if isinstance(images, ElementMap) else tuple(images)
    if img[A.identity] != B.identity:
        return False
    ta, tb = A.table, B.table
    for x in range(A.size):
        row = ta[x]
        ix = img[x]
        brow = tb[ix]
        for y in range(A.size):
            if img[row[y]] != brow[img[y]]:
                return False
    return True


@lru_cache(maxsize=None)
def _homs(A: FinMonoid, B: FinMonoid) -> tuple[ElementMap, ...]:
    out = []
    for img in itertools.product(range(B.size), repeat=A.size):
        if is_hom(A, B, img):
            out.append(ElementMap(A, B, img))
    return tuple(out)


def enumerate_homs(A: FinMonoid, B: FinMonoid) -> list[ElementMap]:
    """Every homomorphism A -> B, in lexicographic order of image vectors."""
    return list(_homs(A, B))


def all_maps(A: FinMonoid, B: FinMonoid, pointed: bool = False) -> Iterable[ElementMap]:
    """Every set map A -> B in lexicographic order; ``pointed`` keeps only maps sending unit to unit."""
    for img in itertools.product(range(B.size), repeat=A.size):
        if pointed and img[A.identity] != B.identity:
            continue
        yield ElementMap(A, B, img)


def identity_map(A: FinMonoid) -> ElementMap:
    return ElementMap(A, A, tuple(range(A.size)))


def zero_map(A: FinMonoid, B: FinMonoid) -> ElementMap:
    return ElementMap(A, B, (B.identity,) * A.size)


def constant_map(A: FinMonoid, B: FinMonoid, b: int) -> ElementMap:
    return ElementMap(A, B, (b,) * A.size)


def compose(g: ElementMap, f: ElementMap) -> ElementMap:
    """g after f."""
    if f.target != g.source:
        raise EndpointMismatch(f"cannot compose {g!r} after {f!r}")
    gi = g.images
    return _trusted(f.source, g.target, tuple(gi[b] for b in f.images))


def add_pointwise(t: ElementMap, s: ElementMap) -> ElementMap:
    """(t + s)(a) = t(a) + s(a), computed in the common target."""
    if t.source != s.source or t.target != s.target:
        raise EndpointMismatch(f"cannot add {t!r} and {s!r}")
    tab = t.target.table
    return _trusted(t.source, t.target, tuple(tab[x][y] for x, y in zip(t.images, s.images)))


def neg_pointwise(t: ElementMap) -> ElementMap:
    inv = t.target.inverse
    if inv is None:
        raise ValueError(f"{t.target.name} is not a group")
    return _trusted(t.source, t.target, tuple(inv[x] for x in t.images))


def is_constant(t: ElementMap) -> bool:
    return len(set(t.images)) <= 1


def monoid_to_json(M: FinMonoid) -> dict:
    return {"name": M.name, "size": M.size, "identity": M.identity,
            "table": [list(row) for row in M.table]}


def monoid_from_json(doc: dict) -> FinMonoid:
    try:
        table, identity = doc["table"], doc["identity"]
    except (KeyError, TypeError) as exc:
        raise OutOfRange(f"monoid document is missing {exc}", ()) from None
    if "size" in doc and doc["size"] != len(table):
        raise OutOfRange(f"size {doc['size']} disagrees with table of {len(table)} rows", ())
    return validate_monoid(table, identity, doc.get("name", "custom"))
