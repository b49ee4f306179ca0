"""Structures with exactly one operation deliberately broken."""

from tcell import finmon
from tcell.cellcore import Cell, CellStructure


class Mutant(CellStructure):
    def __init__(self, base: CellStructure):
        self.base = base
        self.category = base.category
        self.name = f"{base.name}-mutant"

    def cells(self, A, B):
        return self.base.cells(A, B)

    def zero(self, f):
        return self.base.zero(f)

    def vcompose(self, x2, x1):
        return self.base.vcompose(x2, x1)

    def whisker(self, u, x, v):
        return self.base.whisker(u, x, v)


class DropRightPayload(Mutant):
    """(s, g) + (t, f) = (s, f): the right summand's middle part is lost."""

    def vcompose(self, x2, x1):
        r = self.base.vcompose(x2, x1)
        return Cell(r.src, r.tgt, r.dom, x2.t, r.cod)


class RepeatRightWhisker(Mutant):
    """u x v computed as u x (v v)."""

    def whisker(self, u, x, v):
        return self.base.whisker(u, x, finmon.compose(v, v))


class ZeroFromTrivialDom(Mutant):
    """zero(f) claims the zero hom as its domain."""

    def zero(self, f):
        z = self.base.zero(f)
        return Cell(z.src, z.tgt, finmon.zero_map(f.source, f.target), z.t, z.cod)


MUTATIONS = {
    "vcompose_unit": (DropRightPayload, "plus_unit_left"),
    "whisker_functorial": (RepeatRightWhisker, "whisker_functorial"),
    "zero_dom": (ZeroFromTrivialDom, "zero_dom"),
}
