"""Cochain complexes and cohomology dimensions for compatible Leibniz algebras.

Level-n cochains are n-tuples (f_1, ..., f_n) of n-ary maps, with values
either in the algebra itself or in a representation space M.  The level-n
differential interleaves the two graded-bracket differentials:

    d(f_1, ..., f_n) = (-1)^{n-1} (d1 f_1, ..., d2 f_{i-1} + d1 f_i, ..., d2 f_n)

where for self coefficients d_i f = [bracket_i, f], and for representation
coefficients d_i is computed on the lifted space L (+) M:

    d_i f = (-1)^{n-1} [ lift(bracket_i) + lift(left_i) + lift(right_i), lift(f) ]

read off on the single block where it can be nonzero (pure-L inputs,
M-valued output).  ``d_rep(..., full_lift=True)`` instead materializes the
whole bracket on L (+) M and checks that homogeneity claim; it exists as a
test oracle only.

Conventions fixed here and relied on by the pinned regression values:

* the complex starts at level 1, so level-1 cochains are coboundaries only
  when they are zero;
* cochains vectorize parts-major, then row-major over (i_1, ..., i_n, j),
  matching the coefficient layout of ``MultilinearMap``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import CompatibleLeibnizAlgebra, CompatibleRepresentation
from .balavoine import bracket, bracket_entries
from .tensor import BasedSpace, MultilinearMap, direct_sum

DEFAULT_CAP = 10 ** 6

_ZERO = Fraction(0)


class SizeCapExceeded(RuntimeError):
    """A requested cochain/matrix would exceed the configured entry cap."""


# ---------------------------------------------------------------------------
# cochains


@dataclass(frozen=True)
class Cochain:
    """A level-n cochain: n maps of arity n with a common domain and codomain."""

    parts: tuple[MultilinearMap, ...]

    def __post_init__(self):
        n = len(self.parts)
        if n < 1:
            raise ValueError("a cochain needs at least one part")
        space = self.parts[0].domain[0]
        codomain = self.parts[0].codomain
        for f in self.parts:
            if f.arity != n:
                raise ValueError(f"level-{n} cochain parts must have arity {n}")
            if f.domain != (space,) * n or f.codomain != codomain:
                raise ValueError("cochain parts have inconsistent shapes")

    @property
    def level(self) -> int:
        return len(self.parts)

    @property
    def space(self) -> BasedSpace:
        return self.parts[0].domain[0]

    @property
    def codomain(self) -> BasedSpace:
        return self.parts[0].codomain

    @classmethod
    def zero(cls, space: BasedSpace, codomain: BasedSpace, n: int) -> "Cochain":
        part = MultilinearMap.zero((space,) * n, codomain)
        return cls((part,) * n)

    @classmethod
    def from_vector(cls, space: BasedSpace, codomain: BasedSpace, n: int,
                    values: Sequence) -> "Cochain":
        size = space.dim ** n * codomain.dim
        if len(values) != n * size:
            raise ValueError(f"expected {n * size} values, got {len(values)}")
        parts = []
        for p in range(n):
            coeffs = tuple(Fraction(x) for x in values[p * size:(p + 1) * size])
            parts.append(MultilinearMap((space,) * n, codomain, coeffs))
        return cls(tuple(parts))

    def to_vector(self) -> tuple[Fraction, ...]:
        return tuple(x for f in self.parts for x in f.coeffs)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.parts)

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(tuple(a + b for a, b in zip(self.parts, other.parts, strict=True)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return Cochain(tuple(a - b for a, b in zip(self.parts, other.parts, strict=True)))

    def scale(self, c) -> "Cochain":
        return Cochain(tuple(f.scale(c) for f in self.parts))


# ---------------------------------------------------------------------------
# lifts and bidegrees


@dataclass(frozen=True)
class LiftSignature:
    """Which summand of L (+) M each input slot, and the output, came from."""

    inputs: tuple[str, ...]  # each "L" or "M"
    output: str

    def __post_init__(self):
        if self.output not in ("L", "M") or any(x not in ("L", "M") for x in self.inputs):
            raise ValueError("signature letters must be 'L' or 'M'")


@dataclass(frozen=True)
class LiftedMap:
    """A map extended by zero to (L (+) M)^n -> L (+) M, remembering its block."""

    map: MultilinearMap
    signature: LiftSignature


@dataclass(frozen=True)
class Bidegree:
    """Homogeneity type l|k of a map on L (+) M (arity = l + k + 1)."""

    l: int
    k: int


def lift(f: MultilinearMap, inputs: Sequence[str], output: str,
         L: BasedSpace, M: BasedSpace) -> LiftedMap:
    """Extend f by zero to the block space L (+) M along the given signature."""
    sig = LiftSignature(tuple(inputs), output)
    if len(sig.inputs) != f.arity:
        raise ValueError("signature length does not match arity")
    for t, letter in enumerate(sig.inputs):
        want = L if letter == "L" else M
        if f.domain[t] != want:
            raise ValueError(f"slot {t} is {letter} but the map's domain disagrees")
    if f.codomain != (L if sig.output == "L" else M):
        raise ValueError("output letter does not match the map's codomain")
    E = direct_sum(L, M)
    in_shift = tuple(0 if letter == "L" else L.dim for letter in sig.inputs)
    out_shift = 0 if sig.output == "L" else L.dim
    entries = []
    for args, out, c in f.support:
        entries.append((tuple(a + s for a, s in zip(args, in_shift)), out + out_shift, c))
    lifted = MultilinearMap.from_entries((E,) * f.arity, E, entries)
    return LiftedMap(lifted, sig)


def bidegree_of(f: MultilinearMap, L: BasedSpace, M: BasedSpace) -> Bidegree | None:
    """The bidegree of f on (L (+) M)^n if homogeneous, else None.

    The zero map is homogeneous of every bidegree; None is returned for it.
    """
    E_dim = L.dim + M.dim
    if any(sp.dim != E_dim for sp in f.domain) or f.codomain.dim != E_dim:
        raise ValueError("map does not live on the block space")
    found: Bidegree | None = None
    for args, out, _ in f.support:
        n_l = sum(1 for a in args if a < L.dim)
        n_m = len(args) - n_l
        if out < L.dim:
            cand = Bidegree(n_l - 1, n_m)
        else:
            cand = Bidegree(n_l, n_m - 1)
        if found is None:
            found = cand
        elif found != cand:
            return None
    return found


def _structure_lift(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation,
                    which: int) -> MultilinearMap:
    """lift(bracket) + lift(left action) + lift(right action) on L (+) M."""
    L, M = a.space, r.space
    if which == 1:
        pi, ml, mr = a.bracket1, r.left1, r.right1
    elif which == 2:
        pi, ml, mr = a.bracket2, r.left2, r.right2
    else:
        raise ValueError("which must be 1 or 2")
    return (lift(pi, ("L", "L"), "L", L, M).map
            + lift(ml, ("L", "M"), "M", L, M).map
            + lift(mr, ("M", "L"), "M", L, M).map)


# ---------------------------------------------------------------------------
# differentials


def _check_self_cochain(a: CompatibleLeibnizAlgebra, c: Cochain):
    if c.space != a.space or c.codomain != a.space:
        raise ValueError("cochain does not have self coefficients over this algebra")


def _check_rep_map(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation,
                   f: MultilinearMap):
    if f.domain != (a.space,) * f.arity or f.codomain != r.space:
        raise ValueError("expected a map from a tensor power of L into the module")


def d_self(a: CompatibleLeibnizAlgebra, c: Cochain) -> Cochain:
    """Level n -> n+1 differential with self coefficients.

    Part 1 is [b1, f_1], part i is [b2, f_{i-1}] + [b1, f_i], part n+1 is
    [b2, f_n], all scaled by (-1)^{n-1}.
    """
    _check_self_cochain(a, c)
    n = c.level
    left = [bracket(a.bracket1, f) for f in c.parts]
    right = [bracket(a.bracket2, f) for f in c.parts]
    parts = [left[0]]
    for i in range(1, n):
        parts.append(right[i - 1] + left[i])
    parts.append(right[n - 1])
    if (n - 1) % 2:
        parts = [-p for p in parts]
    return Cochain(tuple(parts))


def d_rep(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation, which: int,
          f: MultilinearMap, *, full_lift: bool = False) -> MultilinearMap:
    """One representation differential: (-1)^{n-1} [structure lift, lift(f)].

    The result is read off on pure-L inputs with M-valued output, the only
    block where a 1|0-by-n|-1 bracket can be nonzero.  With ``full_lift`` the
    dense bracket on L (+) M is materialized first and its homogeneity is
    asserted; that path is the test oracle, not the production one.
    """
    _check_rep_map(a, r, f)
    L, M = a.space, r.space
    n = f.arity
    structure = _structure_lift(a, r, which)
    fhat = lift(f, ("L",) * n, "M", L, M).map
    sign = 1 if (n - 1) % 2 == 0 else -1

    if full_lift:
        g = bracket(structure, fhat)
        bd = bidegree_of(g, L, M)
        assert bd is None or bd == Bidegree(n + 1, -1), f"bracket not homogeneous: {bd}"
        entries = [(args, out - L.dim, sign * c) for args, out, c in g.support]
        return MultilinearMap.from_entries((L,) * (n + 1), M, entries)

    acc = bracket_entries(structure, fhat)
    E_dim = L.dim + M.dim
    entries = []
    for flat, c in acc.items():
        if not c:
            continue
        out = flat % E_dim
        rest = flat // E_dim
        args = [0] * (n + 1)
        for t in range(n, -1, -1):
            rest, args[t] = divmod(rest, E_dim)
        if out >= L.dim and all(x < L.dim for x in args):
            entries.append((tuple(args), out - L.dim, sign * c))
    return MultilinearMap.from_entries((L,) * (n + 1), M, entries)


def d_rep_compatible(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation,
                     c: Cochain) -> Cochain:
    """Level n -> n+1 differential with coefficients in the representation."""
    if c.space != a.space or c.codomain != r.space:
        raise ValueError("cochain does not take values in this representation")
    n = c.level
    left = [d_rep(a, r, 1, f) for f in c.parts]
    right = [d_rep(a, r, 2, f) for f in c.parts]
    parts = [left[0]]
    for i in range(1, n):
        parts.append(right[i - 1] + left[i])
    parts.append(right[n - 1])
    return Cochain(tuple(parts))


def _differential(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation | None,
                  c: Cochain) -> Cochain:
    return d_self(a, c) if r is None else d_rep_compatible(a, r, c)


# ---------------------------------------------------------------------------
# matrices and dimensions


def _cochain_sizes(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation | None,
                   n: int) -> tuple[int, int]:
    """(total coordinates of level n, of level n+1)."""
    d = a.space.dim
    m = d if r is None else r.space.dim
    return n * d ** n * m, (n + 1) * d ** (n + 1) * m


def coboundary_matrix(a: CompatibleLeibnizAlgebra, n: int, *,
                      rep: CompatibleRepresentation | None = None,
                      cap: int = DEFAULT_CAP) -> linalg.Matrix:
    """The level-n differential as a matrix over the standard cochain basis.

    Columns follow the cochain vectorization order (parts-major, then
    row-major coefficients), so ``matrix @ c.to_vector() == d(c).to_vector()``.
    """
    if n < 1:
        raise ValueError("cochain levels start at 1")
    cols, rows = _cochain_sizes(a, rep, n)
    if rows * cols > cap:
        raise SizeCapExceeded(
            f"coboundary matrix would hold {rows * cols} entries (cap {cap})")
    codomain = a.space if rep is None else rep.space
    part_size = a.space.dim ** n * codomain.dim
    columns = []
    for p in range(n):
        for pos in range(part_size):
            coeffs = [_ZERO] * part_size
            coeffs[pos] = Fraction(1)
            parts = [MultilinearMap.zero((a.space,) * n, codomain) for _ in range(n)]
            parts[p] = MultilinearMap((a.space,) * n, codomain, tuple(coeffs))
            columns.append(_differential(a, rep, Cochain(tuple(parts))).to_vector())
    return linalg.Matrix.from_columns(columns, rows=rows)


def cohomology_dim(a: CompatibleLeibnizAlgebra, n: int, *,
                   rep: CompatibleRepresentation | None = None,
                   cap: int = DEFAULT_CAP) -> int:
    """dim ker(d at level n) - rank(d at level n-1); the complex starts at level 1."""
    if n < 1:
        raise ValueError("cohomology is defined for levels n >= 1")
    dn = coboundary_matrix(a, n, rep=rep, cap=cap)
    kernel = dn.cols - linalg.rank(dn)
    image = 0 if n == 1 else linalg.rank(coboundary_matrix(a, n - 1, rep=rep, cap=cap))
    return kernel - image


def is_cocycle(a: CompatibleLeibnizAlgebra, c: Cochain, *,
               rep: CompatibleRepresentation | None = None) -> bool:
    return _differential(a, rep, c).is_zero()


def coboundary_preimage(a: CompatibleLeibnizAlgebra, c: Cochain, *,
                        rep: CompatibleRepresentation | None = None,
                        cap: int = DEFAULT_CAP) -> Cochain | None:
    """A level n-1 cochain mapping onto c, or None; only defined for n >= 2."""
    n = c.level
    if n < 2:
        raise ValueError("level-1 cochains have no preimage level")
    matrix = coboundary_matrix(a, n - 1, rep=rep, cap=cap)
    solution = linalg.solve(matrix, c.to_vector())
    if solution is None:
        return None
    return Cochain.from_vector(c.space, c.codomain, n - 1, solution)


def is_coboundary(a: CompatibleLeibnizAlgebra, c: Cochain, *,
                  rep: CompatibleRepresentation | None = None,
                  cap: int = DEFAULT_CAP) -> bool:
    """Whether c lies in the image of d; at level 1 only the zero cochain does."""
    if c.level == 1:
        return c.is_zero()
    return coboundary_preimage(a, c, rep=rep, cap=cap) is not None
