"""Motive decompositions, Betti realizations, and Chow-filtration tables.

The decompositions are bookkeeping over the fixed basis
    1, L, L^2, L^3, h1(M), h1(M)(x)L, h1(M)(x)L^2, W1, W1(x)L, W2
with integer multiplicities, except that the middle Lefschetz
multiplicity of the threefold stays a free symbol n (its value is not
pinned down; the experimental estimators live in the threefold module).
The surface multiplicity is computed three independent ways (assembly
count, Euler identity, Picard-rank count), and a closed-form product
count that lands exactly 2 lower is reported alongside them, flagged,
never silently preferred.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .levels import LevelInvariants, level_invariants


class SymbolicMultiplicityError(ValueError):
    """A numeric table was demanded while n is still symbolic."""


@dataclass(frozen=True)
class Count:
    """Integer count plus an integer multiple of the free symbol n."""

    const: int = 0
    n_part: int = 0

    def __add__(self, other: "Count") -> "Count":
        return Count(self.const + other.const, self.n_part + other.n_part)

    def __sub__(self, other: "Count") -> "Count":
        return Count(self.const - other.const, self.n_part - other.n_part)

    def __mul__(self, k: int) -> "Count":
        return Count(self.const * k, self.n_part * k)

    def is_numeric(self) -> bool:
        return self.n_part == 0

    def numeric(self) -> int:
        if not self.is_numeric():
            raise SymbolicMultiplicityError(f"{self} is symbolic in n")
        return self.const

    def substitute(self, n_value: int) -> int:
        return self.const + self.n_part * n_value

    def __str__(self) -> str:
        if self.n_part == 0:
            return str(self.const)
        n_text = "n" if self.n_part == 1 else f"{self.n_part}n"
        if self.const == 0:
            return n_text
        sign = "+" if self.const > 0 else "-"
        return f"{n_text} {sign} {abs(self.const)}"


CountLike = Union[Count, int]


def as_count(x: CountLike) -> Count:
    return x if isinstance(x, Count) else Count(x)


SYMBOL_N = Count(0, 1)

# basis keys: ("1",), ("L", k), ("h1M", k), ("W1", k), ("W2",)
BASIS_ORDER = [
    ("1",),
    ("L", 1),
    ("L", 2),
    ("L", 3),
    ("h1M", 0),
    ("h1M", 1),
    ("h1M", 2),
    ("W1", 0),
    ("W1", 1),
    ("W2",),
]


def basis_label(key: tuple) -> str:
    kind = key[0]
    if kind == "1":
        return "1"
    if kind == "L":
        return "L" if key[1] == 1 else f"L^{key[1]}"
    if kind == "h1M":
        return "h1(M)" if key[1] == 0 else f"h1(M) (x) {basis_label(('L', key[1]))}"
    if kind == "W1":
        return "W1" if key[1] == 0 else f"W1 (x) {basis_label(('L', key[1]))}"
    return "W2"


def basis_weight(key: tuple) -> int:
    kind = key[0]
    if kind == "1":
        return 0
    if kind == "L":
        return 2 * key[1]
    if kind == "h1M":
        return 1 + 2 * key[1]
    if kind == "W1":
        return 2 + 2 * key[1]
    return 3


def basis_dim(key: tuple, inv: LevelInvariants) -> int:
    """Dimension of the Betti realization of one basis motive."""
    kind = key[0]
    if kind in ("1", "L"):
        return 1
    if kind == "h1M":
        return 2 * inv.genus
    if kind == "W1":
        return 2 * inv.s3
    return 2 * inv.s4


def basis_chow_degrees(key: tuple) -> dict[int, str]:
    """Nonzero Chow degrees of one basis motive, with named graded pieces."""
    kind = key[0]
    if kind == "1":
        return {0: "Q"}
    if kind == "L":
        return {key[1]: "Q"}
    if kind == "h1M":
        return {key[1] + 1: "Jac(M) (x) Q"}
    if kind == "W1":
        return {key[1] + 2: "CH^2_alb(surface)"}
    return {2: "CH^2(W2)", 3: "CH^3(W2)"}


class Motive:
    """Formal multiset over the basis motives."""

    __slots__ = ("multiplicities",)

    def __init__(self, multiplicities: dict[tuple, CountLike]):
        self.multiplicities: dict[tuple, Count] = {}
        for key, m in multiplicities.items():
            m = as_count(m)
            if m.const or m.n_part:
                if key not in BASIS_ORDER:
                    raise ValueError(f"unknown basis motive {key!r}")
                self.multiplicities[key] = m

    def __getitem__(self, key: tuple) -> Count:
        return self.multiplicities.get(key, Count(0))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Motive) and self.multiplicities == other.multiplicities

    def __hash__(self):  # pragma: no cover
        return hash(frozenset(self.multiplicities.items()))

    def render(self) -> str:
        parts = []
        for key in BASIS_ORDER:
            m = self[key]
            if not (m.const or m.n_part):
                continue
            label = basis_label(key)
            text = str(m)
            parts.append(label if text == "1" else f"{text}({label})")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {basis_label(key): str(self[key]) for key in BASIS_ORDER if self[key] != Count(0)}

    def __repr__(self) -> str:
        return f"Motive<{self.render()}>"


def surface_multiplicity(n: int) -> dict:
    """The Lefschetz multiplicity of the surface, all routes side by side."""
    inv = level_invariants(n)
    assembly = 2 + (n - 1) * inv.cusp_count
    closed_form = (n - 1) * inv.cusp_count
    euler_route = n * inv.cusp_count - 2 + 4 * inv.genus - 2 * inv.s3
    # picard-rank count: zero section, one fiber, and the non-identity
    # components of every cusp fiber
    ns_rank = 1 + 1 + inv.cusp_count * (n - 1)
    return {
        "assembly": assembly,
        "euler_route": euler_route,
        "ns_rank": ns_rank,
        "closed_form": closed_form,
        "difference_assembly_minus_closed_form": assembly - closed_form,
        "note": "the closed-form product count comes out exactly 2 below the assembly count at every level; both are printed, neither is silently preferred",
    }


def decompose_surface(n: int) -> Motive:
    m = surface_multiplicity(n)["assembly"]
    return Motive(
        {
            ("1",): 1,
            ("L", 1): m,
            ("L", 2): 1,
            ("h1M", 0): 1,
            ("h1M", 1): 1,
            ("W1", 0): 1,
        }
    )


def decompose_threefold(n: int) -> Motive:
    level_invariants(n)  # level guard
    return Motive(
        {
            ("1",): 1,
            ("L", 1): SYMBOL_N,
            ("L", 2): SYMBOL_N,
            ("L", 3): 1,
            ("h1M", 0): 1,
            ("h1M", 1): 3,
            ("h1M", 2): 1,
            ("W1", 0): 2,
            ("W1", 1): 2,
            ("W2",): 1,
        }
    )


@dataclass(frozen=True)
class BettiTable:
    level: int
    which: str
    b: tuple  # Count per degree 0..2d

    def dimension(self) -> int:
        return (len(self.b) - 1) // 2

    def euler(self) -> Count:
        total = Count(0)
        for i, bi in enumerate(self.b):
            total = total + (bi if i % 2 == 0 else Count(0) - bi)
        return total

    def numeric(self) -> list[int]:
        return [bi.numeric() for bi in self.b]

    def substitute(self, n_value: int) -> list[int]:
        return [bi.substitute(n_value) for bi in self.b]

    def poincare_symmetric(self) -> bool:
        return all(self.b[i] == self.b[len(self.b) - 1 - i] for i in range(len(self.b)))

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "which": self.which,
            "betti": [str(bi) for bi in self.b],
            "euler": str(self.euler()),
        }


def realize_betti(motive: Motive, n: int, which: str = "surface") -> BettiTable:
    inv = level_invariants(n)
    top = 4 if which == "surface" else 6
    b = [Count(0)] * (top + 1)
    for key, mult in motive.multiplicities.items():
        w = basis_weight(key)
        if w > top:
            raise ValueError(f"basis motive {basis_label(key)} exceeds dimension {top // 2}")
        b[w] = b[w] + mult * basis_dim(key, inv)
    table = BettiTable(n, which, tuple(b))
    if which == "surface":
        # alternating sum must be the Euler index, level by level
        assert table.euler().numeric() == n * inv.cusp_count
    return table


def chow_kunneth_table(n: int, which: str = "surface") -> list[Motive]:
    """Weight-graded pieces h^0 .. h^{2d} of the decomposition."""
    motive = decompose_surface(n) if which == "surface" else decompose_threefold(n)
    top = 4 if which == "surface" else 6
    graded: list[dict] = [dict() for _ in range(top + 1)]
    for key, mult in motive.multiplicities.items():
        graded[basis_weight(key)][key] = mult
    return [Motive(g) for g in graded]


@dataclass(frozen=True)
class FiltrationStep:
    nu: int
    label: str
    graded_piece: str  # description of F^nu / F^{nu+1}


@dataclass(frozen=True)
class FiltrationTable:
    level: int
    which: str
    tables: tuple  # per codimension j: tuple of FiltrationStep

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "which": self.which,
            "chow_groups": [
                {
                    "codimension": j,
                    "steps": [
                        {"nu": s.nu, "label": s.label, "graded_piece": s.graded_piece}
                        for s in steps
                    ],
                }
                for j, steps in enumerate(self.tables)
            ],
        }


def _graded_piece(ck: list[Motive], j: int, nu: int) -> str:
    """gr^nu CH^j comes from the weight-(2j - nu) piece of the decomposition."""
    i = 2 * j - nu
    if i < 0 or i >= len(ck):
        return "0"
    parts = []
    for key, mult in ck[i].multiplicities.items():
        piece = basis_chow_degrees(key).get(j)
        if piece is None:
            continue
        text = str(mult)
        parts.append(piece if text == "1" else f"{text}({piece})")
    return " + ".join(sorted(parts)) if parts else "0"


def _step_label(which: str, j: int, nu: int, dim: int) -> str:
    if nu == 0:
        return f"CH^{j}"
    if nu == 1:
        return f"CH^{j}_hom"
    if nu == 2 and j == dim:
        return f"CH^{j}_alb"
    if which == "threefold" and j == 2 and nu == 2:
        return "contained in CH^2_AJ (char 0)"
    if which == "threefold" and j == 3 and nu == 3:
        return "CH^3(W2)"
    return f"F^{nu}CH^{j}"


def filtration_table(n: int, which: str = "surface") -> FiltrationTable:
    ck = chow_kunneth_table(n, which)
    dim = 2 if which == "surface" else 3
    # structural vanishing: every constituent of h^i has its nonzero Chow
    # degrees j within j <= i <= 2j
    for i, piece in enumerate(ck):
        for key in piece.multiplicities:
            for j in basis_chow_degrees(key):
                assert j <= i <= 2 * j, (
                    f"constituent {basis_label(key)} of weight piece {i} has Chow degree {j}"
                )
    tables = []
    for j in range(dim + 1):
        steps = tuple(
            FiltrationStep(nu, _step_label(which, j, nu, dim), _graded_piece(ck, j, nu))
            for nu in range(j + 1)
        )
        tables.append(steps)
    return FiltrationTable(n, which, tuple(tables))


def codim_one_checklist(n: int, which: str = "surface") -> list[dict]:
    """Divisor-group deduction rendered as a checklist over the weight table.

    Once the weight-1 projector is the identity on homologically trivial
    divisors, every divisor class splits across the weight-1 and weight-2
    pieces and the kernel of the top-degree slot is the homologically
    trivial part; structurally that means CH^1 only meets h^1 and h^2,
    and the two graded pieces are the ones the table names.
    """
    ck = chow_kunneth_table(n, which)
    entries = []

    def check(name: str, claim: str, ok: bool) -> None:
        entries.append({"name": name, "claim": claim, "status": "pass" if ok else "fail"})

    supported = set()
    for i, piece in enumerate(ck):
        for key in piece.multiplicities:
            if 1 in basis_chow_degrees(key):
                supported.add(i)
    check(
        "ch1:support",
        "CH^1 meets only the weight-1 and weight-2 pieces",
        supported == {1, 2},
    )
    ft = filtration_table(n, which)
    steps = ft.tables[1]
    check("ch1:steps", "CH^1 has exactly one descent", len(steps) == 2)
    check(
        "ch1:hom_step",
        "the descent is the homologically trivial part",
        steps[1].label == "CH^1_hom",
    )
    check(
        "ch1:jacobian_piece",
        "gr^1 CH^1 is the Jacobian piece from the weight-1 slot",
        steps[1].graded_piece == "Jac(M) (x) Q",
    )
    check(
        "ch1:algebraic_piece",
        "gr^0 CH^1 is spanned by the Lefschetz classes of the weight-2 slot",
        steps[0].graded_piece.endswith("(Q)") or steps[0].graded_piece == "Q",
    )
    return entries
