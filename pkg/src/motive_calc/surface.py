"""Correspondence algebra of the compactified elliptic modular surface.

A correspondence is an exact-rational combination of four kinds of atoms:
graphs of fiberwise endomorphisms, transposed graphs of collapses, the
vertical class V (pullback of the pushed-down self-intersection of the
zero section), and products of cusp-fiber components.  Composition is the
bilinear extension of a closed rewrite table; each rule beyond the graph
functoriality laws is derived from the pushforward/pullback composition
formulas and the product-correspondence formula
    (Z x W) o (X x Y) = (Y . Z) (X x W),
with (Y . Z) the N-gon intersection pairing.  The derivations are noted
rule by rule below, and the whole table is cross-checked by the
associativity and action-coherence test suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .endos import AffEnd, SurfEnd, aff_compose, aff_end, mu0, surf_compose, surf_end, surf_identity
from .exact import LinearCoeff, RatMatrix, fmt_rational, mat_inverse, mat_rank
from .groups import LevelMismatchError, epsilon_projector
from .levels import _check_level, cusp_count

Atom = tuple
Coeff = Union[int, Fraction]


class UnsupportedCompositionError(ValueError):
    """A composition outside the closed rule table was requested."""


class UnsupportedActionError(ValueError):
    """A divisor pairing outside the action table was requested."""


# -- atoms -------------------------------------------------------------------

def graph(f: SurfEnd) -> Atom:
    return ("G", f)


def tgraph(f: SurfEnd) -> Atom:
    """Transposed graph; for automorphisms this is the graph of the inverse."""
    if f.is_automorphism():
        return ("G", f.inv())
    return ("T", f)


VERT: Atom = ("V",)


def cusp_prod(c: int, m: int, n: int) -> Atom:
    return ("C", c, m, n)


_KIND_RANK = {"G": 0, "T": 1, "V": 2, "C": 3}


def atom_sort_key(atom: Atom) -> tuple:
    kind = atom[0]
    rank = _KIND_RANK[kind]
    if kind in ("G", "T"):
        e: SurfEnd = atom[1]
        return (rank, int(e.collapse), e.b1, e.b2, -e.s)
    if kind == "V":
        return (rank, 0, 0, 0, 0)
    return (rank, atom[1], atom[2], atom[3])


def atom_label(atom: Atom) -> str:
    kind = atom[0]
    if kind == "G":
        return f"Graph({atom[1].label()})"
    if kind == "T":
        return f"tGraph({atom[1].label()})"
    if kind == "V":
        return "V"
    return f"CP({atom[1]};{atom[2]},{atom[3]})"


# -- the Neron N-gon lattice --------------------------------------------------

def an_entry(n: int, i: int, j: int) -> int:
    """Intersection number of cusp-fiber components i and j (cyclic N-gon)."""
    d = (i - j) % n
    if d == 0:
        return -2
    if d == 1 or d == n - 1:
        return 1
    return 0


@dataclass(frozen=True)
class NeronLattice:
    level: int
    full_matrix: RatMatrix
    rank: int
    reduced_block: RatMatrix
    reduced_inverse: RatMatrix

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "full_matrix": self.full_matrix.to_json(),
            "rank": self.rank,
            "reduced_block": self.reduced_block.to_json(),
            "reduced_inverse": self.reduced_inverse.to_json(),
        }


@lru_cache(maxsize=None)
def neron_lattice(n: int) -> NeronLattice:
    _check_level(n)
    full = RatMatrix([[an_entry(n, i, j) for j in range(n)] for i in range(n)])
    reduced = full.submatrix(range(1, n), range(1, n))
    return NeronLattice(
        level=n,
        full_matrix=full,
        rank=mat_rank(full),
        reduced_block=reduced,
        reduced_inverse=mat_inverse(reduced),
    )


# -- formal sums ---------------------------------------------------------------

class SurfCorr:
    """Formal exact-rational combination of surface atoms."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms: dict | None = None):
        self.level = level
        self.terms: dict = {}
        if terms:
            for atom, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[atom] = c

    @staticmethod
    def of(level: int, atom: Atom, coeff: Coeff = 1) -> "SurfCorr":
        return SurfCorr(level, {atom: Fraction(coeff)})

    @staticmethod
    def zero(level: int) -> "SurfCorr":
        return SurfCorr(level)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SurfCorr") -> "SurfCorr":
        self._check(other)
        out = dict(self.terms)
        for atom, c in other.terms.items():
            acc = out.get(atom, Fraction(0)) + c
            if acc:
                out[atom] = acc
            else:
                out.pop(atom, None)
        return SurfCorr(self.level, out)

    def __sub__(self, other: "SurfCorr") -> "SurfCorr":
        return self + other.scale(-1)

    def scale(self, k: Coeff) -> "SurfCorr":
        k = Fraction(k)
        if not k:
            return SurfCorr(self.level)
        return SurfCorr(self.level, {a: c * k for a, c in self.terms.items()})

    def _check(self, other: "SurfCorr") -> None:
        if self.level != other.level:
            raise LevelMismatchError("correspondences of different levels")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SurfCorr) and self.level == other.level and self.terms == other.terms

    def __hash__(self):  # pragma: no cover
        return hash((self.level, frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for atom in sorted(self.terms, key=atom_sort_key):
            c = self.terms[atom]
            parts.append(f"{fmt_rational(c)}*{atom_label(atom)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SurfCorr<{self.render()}>"


# -- transposition -------------------------------------------------------------

def transpose_atom(atom: Atom) -> Atom:
    kind = atom[0]
    if kind == "G":
        f: SurfEnd = atom[1]
        return ("T", f) if f.collapse else ("G", f.inv())
    if kind == "T":
        return ("G", atom[1])
    if kind == "V":
        return VERT
    return ("C", atom[1], atom[3], atom[2])


def transpose(x: SurfCorr) -> SurfCorr:
    return SurfCorr(x.level, {transpose_atom(a): c for a, c in x.terms.items()})


# -- composition rule table -----------------------------------------------------
#
# Naming: compose(after, before) = after o before.  Derivations:
#   R1/R2  graph functoriality (transposes compose contravariantly).
#   R3/R4  convert the automorphism side to the opposite species via
#          Graph(g) = tGraph(g^-1); a collapse against a collapse is the
#          excess-intersection class: zero in one order (image has the
#          wrong dimension), V in the other when the two sections agree.
#   R5-R8  V is a sum of full fiber squares: automorphisms fix it,
#          pushing it through a collapse drops dimension, pulling the
#          fiber class back through any fiberwise map returns it, and
#          V o V = 0 (V is nilpotent of order two).
#   R9     product-correspondence formula with the N-gon pairing.
#   R10/R11  push/pull a component product through a graph: the free slot
#          is acted on by the component index action (translations shift
#          by the first coordinate, inversion negates); pulling through a
#          collapse expands the matching component to the full fiber.
#   R12/R13  same for transposed collapse graphs on the other slot.
#   R14    a component product against V pairs a cusp component with the
#          full fiber class, and every such pairing is a zero row sum.


def compose_atom_pair(x: Atom, y: Atom, level: int) -> list[tuple[Atom, Coeff]] | None:
    """after=x composed with before=y; None means zero."""
    kx = x[0]
    ky = y[0]
    if kx == "G":
        f: SurfEnd = x[1]
        if ky == "G":
            return [(("G", surf_compose(f, y[1])), 1)]  # R1
        if ky == "T":
            if f.collapse:
                return None  # R3: (f x c)_* of the diagonal drops dimension
            return [(("T", surf_compose(y[1], f.inv())), 1)]  # R3
        if ky == "V":
            return None if f.collapse else [(VERT, 1)]  # R5
        # R10
        if f.collapse:
            return None
        c, m, n = y[1], y[2], y[3]
        return [(("C", c, m, (f.b1 + f.s * n) % level), 1)]
    if kx == "T":
        cend: SurfEnd = x[1]
        if ky == "G":
            f = y[1]
            if f.collapse:
                # R4: equal sections give the vertical class, else disjoint
                if (cend.b1, cend.b2) == (f.b1, f.b2):
                    return [(VERT, 1)]
                return None
            return [(("T", surf_compose(f.inv(), cend)), 1)]  # R4
        if ky == "T":
            return [(("T", surf_compose(y[1], cend)), 1)]  # R2
        if ky == "V":
            return [(VERT, 1)]  # R7
        # R12: pullback expands the matching component to the full fiber
        c, m, n = y[1], y[2], y[3]
        if n == cend.b1:
            return [(("C", c, m, k), 1) for k in range(level)]
        return None
    if kx == "V":
        if ky == "G":
            return [(VERT, 1)]  # R6
        if ky == "T":
            return None  # R7
        return None  # R8 (V o V) and R14 (V o CP)
    # kx == "C"
    cx, mx, nx = x[1], x[2], x[3]
    if ky == "C":
        cy, my, ny = y[1], y[2], y[3]
        if cx != cy:
            return None  # distinct cusp fibers are disjoint
        pairing = an_entry(level, ny, mx)  # R9
        if not pairing:
            return None
        return [(("C", cx, my, nx), pairing)]
    if ky == "G":
        f = y[1]
        if f.collapse:
            # R11 collapse: pull the first slot back through the collapse
            if mx == f.b1:
                return [(("C", cx, k, nx), 1) for k in range(level)]
            return None
        fi = f.inv()
        return [(("C", cx, (fi.b1 + fi.s * mx) % level, nx), 1)]  # R11
    if ky == "T":
        return None  # R13
    return None  # R14 (CP o V)


def _split_by_cusp(terms: dict) -> tuple[list, dict]:
    """Separate component-product atoms per cusp; they only meet their own cusp."""
    other: list = []
    by_cusp: dict[int, list] = {}
    for atom, c in terms.items():
        if atom[0] == "C":
            by_cusp.setdefault(atom[1], []).append((atom, c))
        else:
            other.append((atom, c))
    return other, by_cusp


def compose(after: SurfCorr, before: SurfCorr) -> SurfCorr:
    after._check(before)
    level = after.level
    out: dict = {}

    def accumulate(ax, cx, ay, cy) -> None:
        produced = compose_atom_pair(ax, ay, level)
        if not produced:
            return
        c = cx * cy
        for atom, k in produced:
            acc = out.get(atom, Fraction(0)) + c * k
            if acc:
                out[atom] = acc
            else:
                out.pop(atom, None)

    x_other, x_cusp = _split_by_cusp(after.terms)
    y_other, y_cusp = _split_by_cusp(before.terms)
    for ax, cx in x_other:
        for ay, cy in y_other:
            accumulate(ax, cx, ay, cy)
        for bucket in y_cusp.values():
            for ay, cy in bucket:
                accumulate(ax, cx, ay, cy)
    for cusp, bucket_x in x_cusp.items():
        for ax, cx in bucket_x:
            for ay, cy in y_other:
                accumulate(ax, cx, ay, cy)
            for ay, cy in y_cusp.get(cusp, ()):
                accumulate(ax, cx, ay, cy)
    return SurfCorr(level, out)


# -- named projectors -----------------------------------------------------------

def delta(n: int) -> SurfCorr:
    return SurfCorr.of(n, graph(surf_identity(n)))


def group_ring_to_corr(element) -> SurfCorr:
    """Image of a group-ring element under g -> Graph(g)."""
    level = None
    terms = {}
    for g, c in element.terms.items():
        level = g.level
        terms[graph(surf_end(g.level, g.b1, g.b2, g.s, False))] = c
    if level is None:
        raise ValueError("cannot infer the level of an empty group-ring element")
    return SurfCorr(level, terms)


def epsilon_graph_sum(n: int) -> SurfCorr:
    """(1/2N^2) sum over G of eps(g) Graph(g); image of the group-ring projector."""
    return group_ring_to_corr(epsilon_projector(n))


def build_pi_bars(n: int) -> dict[str, SurfCorr]:
    """pi0 = tGraph(mu0) - V/2, pi2 = Graph(mu0) - V/2, pi1 = sign-character average."""
    _check_level(n)
    half = Fraction(1, 2)
    m0 = mu0(n)
    pi0 = SurfCorr(n, {("T", m0): Fraction(1), VERT: -half})
    pi2 = SurfCorr(n, {("G", m0): Fraction(1), VERT: -half})
    return {"pi0": pi0, "pi1": epsilon_graph_sum(n), "pi2": pi2}


def build_pi_cusp(n: int, c: int) -> SurfCorr:
    """Dual-basis combination of component products over one cusp fiber."""
    _check_level(n)
    if not 0 <= c < cusp_count(n):
        raise ValueError(f"cusp index {c} out of range")
    inv = neron_lattice(n).reduced_inverse
    terms = {}
    for m in range(1, n):
        for k in range(1, n):
            coeff = inv[m - 1, k - 1]
            if coeff:
                terms[cusp_prod(c, m, k)] = coeff
    return SurfCorr(n, terms)


def build_pi_f(n: int) -> SurfCorr:
    bars = build_pi_bars(n)
    return bars["pi0"] + bars["pi1"] + bars["pi2"]


def build_pi_inf(n: int) -> SurfCorr:
    return delta(n) - build_pi_f(n)


def lambda_corr(n: int) -> SurfCorr:
    half = Fraction(1, 2)
    return SurfCorr(
        n,
        {graph(surf_identity(n)): half, graph(surf_end(n, 0, 0, -1, False)): -half},
    )


def theta_corr(n: int) -> SurfCorr:
    terms = {graph(surf_end(n, b1, b2, 1, False)): Fraction(1, n * n) for b1 in range(n) for b2 in range(n)}
    return SurfCorr(n, terms)


# -- divisor classes and the action table ---------------------------------------

DivKey = tuple

GENERIC_FIBER: DivKey = ("F",)


def sec_key(b1: int, b2: int) -> DivKey:
    return ("S", b1, b2)


def theta_key(c: int, m: int) -> DivKey:
    return ("Th", c, m)


def div_sort_key(key: DivKey) -> tuple:
    kind = key[0]
    if kind == "F":
        return (0, 0, 0)
    if kind == "S":
        return (1, key[1], key[2])
    return (2, key[1], key[2])


def div_label(key: DivKey) -> str:
    if key[0] == "F":
        return "[fiber]"
    if key[0] == "S":
        return f"[sec({key[1]},{key[2]})]"
    return f"[theta({key[1]};{key[2]})]"


class DivClass:
    """Formal combination of divisor basis classes with linear-in-d_a coefficients."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms: dict | None = None):
        self.level = level
        self.terms: dict = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, LinearCoeff):
                    c = LinearCoeff.of(c)
                if c:
                    self.terms[key] = c

    @staticmethod
    def of(level: int, key: DivKey, coeff=1) -> "DivClass":
        return DivClass(level, {key: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DivClass") -> "DivClass":
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, LinearCoeff()) + c
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
        return DivClass(self.level, out)

    def __sub__(self, other: "DivClass") -> "DivClass":
        return self + other.scale(-1)

    def scale(self, k) -> "DivClass":
        k = Fraction(k)
        return DivClass(self.level, {key: c.scale(k) for key, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DivClass) and self.level == other.level and self.terms == other.terms

    def __hash__(self):  # pragma: no cover
        return hash((self.level, frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=div_sort_key):
            parts.append(f"({self.terms[key]})*{div_label(key)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DivClass<{self.render()}>"


def full_cusp_fiber(n: int, c: int) -> DivClass:
    return DivClass(n, {theta_key(c, m): 1 for m in range(n)})


def act_atom_on_key(atom: Atom, key: DivKey, level: int) -> list[tuple[DivKey, LinearCoeff]]:
    """One atom acting on one divisor basis class."""
    kind = atom[0]
    one = LinearCoeff.of(1)
    if kind == "G":
        f: SurfEnd = atom[1]
        if f.collapse:
            if key[0] == "S":
                return [(sec_key(f.b1, f.b2), one)]
            return []  # fibers and components push forward to points
        if key[0] == "F":
            return [(GENERIC_FIBER, one)]
        if key[0] == "S":
            return [(sec_key((f.b1 + f.s * key[1]) % level, (f.b2 + f.s * key[2]) % level), one)]
        return [(theta_key(key[1], (f.b1 + f.s * key[2]) % level), one)]
    if kind == "T":
        cend: SurfEnd = atom[1]
        if key[0] == "F":
            return [(GENERIC_FIBER, one)]
        if key[0] == "S":
            if (key[1], key[2]) == (cend.b1, cend.b2):
                # section against itself: d_a times the fiber class
                return [(GENERIC_FIBER, LinearCoeff.d_a())]
            return []
        c, m = key[1], key[2]
        if m == cend.b1:
            return [(theta_key(c, k), one) for k in range(level)]
        return []
    if kind == "V":
        # z -> d_a (z . fiber) fiber; only sections meet the fiber
        if key[0] == "S":
            return [(GENERIC_FIBER, LinearCoeff.d_a())]
        return []
    # cusp product: z -> (z . theta_c(m)) theta_c(n)
    c, m, n_idx = atom[1], atom[2], atom[3]
    if key[0] == "F":
        return []  # fiber class meets every cusp component in degree zero
    if key[0] == "S":
        if key[1] == m:
            # a section meets the cusp fiber once, on the component named
            # by its first coordinate
            return [(theta_key(c, n_idx), one)]
        return []
    if key[1] != c:
        return []
    pairing = an_entry(level, key[2], m)
    if not pairing:
        return []
    return [(theta_key(c, n_idx), LinearCoeff.of(pairing))]


def act_on_divisor(x: SurfCorr, z: DivClass) -> DivClass:
    if x.level != z.level:
        raise LevelMismatchError("correspondence and divisor of different levels")
    out: dict = {}
    for atom, ca in x.terms.items():
        for key, cz in z.terms.items():
            for new_key, rule_coeff in act_atom_on_key(atom, key, x.level):
                contrib = (cz * rule_coeff).scale(ca)
                acc = out.get(new_key, LinearCoeff()) + contrib
                if acc:
                    out[new_key] = acc
                else:
                    out.pop(new_key, None)
    return DivClass(x.level, out)


# -- restriction to the open part ------------------------------------------------

def aff_of(f: SurfEnd) -> AffEnd:
    """Restrict a fiberwise endomorphism to the open part."""
    if f.collapse:
        return aff_end(f.level, 0, f.b1, f.b2)
    return aff_end(f.level, f.s, f.b1, f.b2)


OpenAtom = tuple


def open_graph(a: AffEnd) -> OpenAtom:
    return ("g", a)


def open_tgraph(a: AffEnd) -> OpenAtom:
    # the transposed graph of a degree-one map is the graph of its inverse
    if a.is_automorphism():
        return ("g", a.inv())
    return ("t", a)


def open_atom_sort_key(atom: OpenAtom) -> tuple:
    species, a = atom
    return (0 if species == "g" else 1, a.n, a.b1, a.b2)


def open_atom_label(atom: OpenAtom) -> str:
    species, a = atom
    return f"Graph({a.label()})" if species == "g" else f"tGraph({a.label()})"


class OpenCorr:
    """Formal combination of open-part graphs and transposed graphs."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms: dict | None = None):
        self.level = level
        self.terms: dict = {}
        if terms:
            for atom, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[atom] = c

    def __add__(self, other: "OpenCorr") -> "OpenCorr":
        out = dict(self.terms)
        for a, c in other.terms.items():
            acc = out.get(a, Fraction(0)) + c
            if acc:
                out[a] = acc
            else:
                out.pop(a, None)
        return OpenCorr(self.level, out)

    def scale(self, k) -> "OpenCorr":
        k = Fraction(k)
        return OpenCorr(self.level, {a: c * k for a, c in self.terms.items()})

    def __sub__(self, other: "OpenCorr") -> "OpenCorr":
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OpenCorr) and self.level == other.level and self.terms == other.terms

    def __hash__(self):  # pragma: no cover
        return hash((self.level, frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{fmt_rational(self.terms[a])}*{open_atom_label(a)}"
            for a in sorted(self.terms, key=open_atom_sort_key)
        )

    def __repr__(self) -> str:
        return f"OpenCorr<{self.render()}>"


def compose_open_atoms(x: OpenAtom, y: OpenAtom) -> OpenAtom:
    """after=x, before=y; mixed species need an invertible side."""
    sx, ax = x
    sy, ay = y
    if sx == "g" and sy == "g":
        return ("g", aff_compose(ax, ay))
    if sx == "t" and sy == "t":
        return open_tgraph(aff_compose(ay, ax))
    if sx == "g" and sy == "t":
        if ax.is_automorphism():
            return open_tgraph(aff_compose(ay, ax.inv()))
        raise UnsupportedCompositionError("graph o tgraph with no invertible side")
    # sx == "t", sy == "g"
    if ay.is_automorphism():
        return open_tgraph(aff_compose(ay.inv(), ax))
    if ax.is_automorphism():
        return ("g", aff_compose(ax.inv(), ay))
    raise UnsupportedCompositionError("tgraph o graph with no invertible side")


def compose_open(after: OpenCorr, before: OpenCorr) -> OpenCorr:
    out: dict = {}
    for ax, cx in after.terms.items():
        for ay, cy in before.terms.items():
            atom = compose_open_atoms(ax, ay)
            acc = out.get(atom, Fraction(0)) + cx * cy
            if acc:
                out[atom] = acc
            else:
                out.pop(atom, None)
    return OpenCorr(after.level, out)


def restrict_to_open(x: SurfCorr) -> OpenCorr:
    """Kill everything supported over the cusps; keep graphs as affine graphs."""
    out: dict = {}
    for atom, c in x.terms.items():
        kind = atom[0]
        if kind in ("V", "C"):
            continue
        if kind == "G":
            key = open_graph(aff_of(atom[1]))
        else:
            key = open_tgraph(aff_of(atom[1]))
        acc = out.get(key, Fraction(0)) + c
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return OpenCorr(x.level, out)


# -- certificate -----------------------------------------------------------------

def _entry(name: str, law: str, ok: bool, detail: str = "") -> dict:
    lhs, _, rhs = law.rpartition(" = ")
    e = {"name": name, "lhs": lhs, "rhs": rhs, "status": "pass" if ok else "fail"}
    if not ok and detail:
        e["got"] = detail
    return e


def surface_certificate(n: int) -> list[dict]:
    """Every composition/orthogonality/action identity for the surface projectors."""
    _check_level(n)
    bars = build_pi_bars(n)
    c_count = cusp_count(n)
    named: list[tuple[str, SurfCorr]] = [(k, bars[k]) for k in ("pi0", "pi1", "pi2")]
    named += [(f"piC({c})", build_pi_cusp(n, c)) for c in range(c_count)]
    pi_inf = build_pi_inf(n)

    entries: list[dict] = []

    def check_corr(name: str, law: str, got: SurfCorr, want: SurfCorr) -> None:
        ok = got == want
        detail = "" if ok else f"got {got.render()}, want {want.render()}"
        entries.append(_entry(name, law, ok, detail))

    def check_div(name: str, law: str, got: DivClass, want: DivClass) -> None:
        ok = got == want
        detail = "" if ok else f"got {got.render()}, want {want.render()}"
        entries.append(_entry(name, law, ok, detail))

    # Kronecker pattern over the full projector list
    for (name_a, pa) in named:
        for (name_b, pb) in named:
            product = compose(pa, pb)
            want = pa if name_a == name_b else SurfCorr.zero(n)
            law = f"{name_a} . {name_b} = {name_a if name_a == name_b else '0'}"
            check_corr(f"kronecker:{name_a}.{name_b}", law, product, want)

    # transpose symmetry
    check_corr("transpose:pi0", "t(pi0) = pi2", transpose(bars["pi0"]), bars["pi2"])
    check_corr("transpose:pi1", "t(pi1) = pi1", transpose(bars["pi1"]), bars["pi1"])
    for c in range(c_count):
        pc = build_pi_cusp(n, c)
        check_corr(f"transpose:piC({c})", f"t(piC({c})) = piC({c})", transpose(pc), pc)

    # residual projector
    check_corr("residual:idempotent", "piInf . piInf = piInf", compose(pi_inf, pi_inf), pi_inf)
    check_corr("residual:transpose", "t(piInf) = piInf", transpose(pi_inf), pi_inf)
    for name_a, pa in named[:3]:
        check_corr(
            f"residual:piInf.{name_a}",
            f"piInf . {name_a} = 0",
            compose(pi_inf, pa),
            SurfCorr.zero(n),
        )
        check_corr(
            f"residual:{name_a}.piInf",
            f"{name_a} . piInf = 0",
            compose(pa, pi_inf),
            SurfCorr.zero(n),
        )
    for c in range(c_count):
        pc = build_pi_cusp(n, c)
        check_corr(
            f"residual:piInf.piC({c})",
            f"piInf . piC({c}) = piC({c})",
            compose(pi_inf, pc),
            pc,
        )
        check_corr(
            f"residual:piC({c}).piInf",
            f"piC({c}) . piInf = piC({c})",
            compose(pc, pi_inf),
            pc,
        )

    # nilpotent-lift witnesses: p and its corrected projector define the
    # same motive because (p - p')^2 = 0 and p p' p = p, p' p p' = p'
    m0 = mu0(n)
    for tag, p, p_prime in (
        ("pi0", SurfCorr.of(n, ("T", m0)), bars["pi0"]),
        ("pi2", SurfCorr.of(n, ("G", m0)), bars["pi2"]),
    ):
        diff = p - p_prime
        check_corr(
            f"witness:{tag}:nilpotent",
            "(p - p')^2 = 0",
            compose(diff, diff),
            SurfCorr.zero(n),
        )
        check_corr(
            f"witness:{tag}:p.p'.p",
            "p . p' . p = p",
            compose(compose(p, p_prime), p),
            p,
        )
        check_corr(
            f"witness:{tag}:p'.p.p'",
            "p' . p . p' = p'",
            compose(compose(p_prime, p), p_prime),
            p_prime,
        )

    # divisor action rows
    fiber = DivClass.of(n, GENERIC_FIBER)
    check_div("action:pi0:fiber", "pi0[fiber] = [fiber]", act_on_divisor(bars["pi0"], fiber), fiber)
    for name_a, pa in named[1:3]:
        check_div(
            f"action:{name_a}:fiber",
            f"{name_a}[fiber] = 0",
            act_on_divisor(pa, fiber),
            DivClass(n),
        )
    theta00 = DivClass.of(n, theta_key(0, 0))
    check_div(
        "action:pi0:theta(0;0)",
        "pi0[theta(0;0)] = full fiber over cusp 0",
        act_on_divisor(bars["pi0"], theta00),
        full_cusp_fiber(n, 0),
    )
    for name_a, pa in named[:3]:
        for m in range(n):
            if name_a == "pi0" and m == 0:
                continue
            z = DivClass.of(n, theta_key(0, m))
            check_div(
                f"action:{name_a}:theta(0;{m})",
                f"{name_a}[theta(0;{m})] = 0",
                act_on_divisor(pa, z),
                DivClass(n),
            )
    pc0 = build_pi_cusp(n, 0)
    for m in range(1, n):
        z = DivClass.of(n, theta_key(0, m))
        check_div(
            f"action:piC(0):theta(0;{m})",
            f"piC(0)[theta(0;{m})] = theta(0;{m})",
            act_on_divisor(pc0, z),
            z,
        )
    # averaging row for the translation part
    theta_avg = act_on_divisor(theta_corr(n), theta00)
    check_div(
        "action:theta_avg",
        "translation average of theta(0;0) = (1/N) full fiber",
        theta_avg,
        full_cusp_fiber(n, 0).scale(Fraction(1, n)),
    )
    # the residual acts on cusp components exactly as the cusp projectors do
    for m in range(n):
        z = DivClass.of(n, theta_key(0, m))
        lhs = z - act_on_divisor(build_pi_f(n), z)
        rhs = act_on_divisor(pc0, z)
        check_div(
            f"residual_action:theta(0;{m})",
            "(Delta - piF)[theta] = piC[theta]",
            lhs,
            rhs,
        )

    return entries
