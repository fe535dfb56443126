"""Based vector spaces, exact vectors, and dense multilinear maps.

A based space is a dimension plus a label; vectors over it are tuples of
``fractions.Fraction``.  An n-ary multilinear map f between based spaces is
stored by its values on basis tuples: a dense row-major coefficient tensor
indexed by (i_1, ..., i_n, j), where ``coeff((i_1,...,i_n), j)`` is the
e_j-component of f(e_{i_1}, ..., e_{i_n}).  Those coefficients determine the
map on all vectors by multilinearity, so exact equality of maps is exact
equality of coefficient tensors.

Basis indices are 0-based throughout the package and its file formats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    """Coerce ints/Fractions/strings to an exact rational; floats are rejected."""
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class BasedSpace:
    """A finite-dimensional vector space with a chosen basis e_0 ... e_{dim-1}."""

    dim: int
    label: str = ""

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")

    def __repr__(self):
        return f"BasedSpace({self.dim}, {self.label!r})"


def direct_sum(a: BasedSpace, b: BasedSpace) -> BasedSpace:
    """Block space a (+) b: indices 0..a.dim-1 are the a-block, the rest the b-block."""
    return BasedSpace(a.dim + b.dim, f"{a.label}+{b.label}")


def zero_vector(space: BasedSpace) -> Vector:
    return (_ZERO,) * space.dim


def basis_vector(space: BasedSpace, i: int) -> Vector:
    if not 0 <= i < space.dim:
        raise IndexError(f"basis index {i} out of range for dim {space.dim}")
    return tuple(_ONE if t == i else _ZERO for t in range(space.dim))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Vector) -> Vector:
    c = as_scalar(c)
    return tuple(c * a for a in v)


def vis_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class MultilinearMap:
    """A multilinear map (x) domain[0] ... (x) domain[n-1] -> codomain."""

    domain: tuple[BasedSpace, ...]
    codomain: BasedSpace
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.domain) < 1:
            raise ValueError("arity must be at least 1")
        size = self.codomain.dim
        for sp in self.domain:
            size *= sp.dim
        if len(self.coeffs) != size:
            raise ValueError(f"expected {size} coefficients, got {len(self.coeffs)}")

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, domain: Sequence[BasedSpace], codomain: BasedSpace) -> "MultilinearMap":
        domain = tuple(domain)
        size = codomain.dim
        for sp in domain:
            size *= sp.dim
        return cls(domain, codomain, (_ZERO,) * size)

    @classmethod
    def identity(cls, space: BasedSpace) -> "MultilinearMap":
        return cls((space,), space,
                   tuple(_ONE if i == j else _ZERO
                         for i in range(space.dim) for j in range(space.dim)))

    @classmethod
    def from_entries(cls, domain: Sequence[BasedSpace], codomain: BasedSpace,
                     entries: Iterable[tuple[tuple[int, ...], int, object]]) -> "MultilinearMap":
        """Build from (basis index tuple, output index, coefficient) triples.

        Duplicate positions are summed.
        """
        domain = tuple(domain)
        dims = [sp.dim for sp in domain]
        cod = codomain.dim
        size = cod
        for d in dims:
            size *= d
        acc: dict[int, Fraction] = {}
        for args, out, c in entries:
            args = tuple(args)
            if len(args) != len(domain):
                raise ValueError(f"entry {args} has arity {len(args)}, expected {len(domain)}")
            flat = 0
            for t, i in enumerate(args):
                if not 0 <= i < dims[t]:
                    raise ValueError(f"index {i} out of range for dim {dims[t]} in slot {t}")
                flat = flat * dims[t] + i
            if not 0 <= out < cod:
                raise ValueError(f"output index {out} out of range for dim {cod}")
            flat = flat * cod + out
            acc[flat] = acc.get(flat, _ZERO) + as_scalar(c)
        coeffs = [_ZERO] * size
        for flat, c in acc.items():
            coeffs[flat] = c
        return cls(domain, codomain, tuple(coeffs))

    @classmethod
    def from_function(cls, domain: Sequence[BasedSpace], codomain: BasedSpace,
                      fn: Callable[..., Vector]) -> "MultilinearMap":
        """Tabulate fn on all basis tuples; fn receives basis vectors."""
        domain = tuple(domain)
        coeffs: list[Fraction] = []
        for args in itertools.product(*[range(sp.dim) for sp in domain]):
            value = fn(*[basis_vector(sp, i) for sp, i in zip(domain, args)])
            if len(value) != codomain.dim:
                raise ValueError("function value has wrong dimension")
            coeffs.extend(as_scalar(x) for x in value)
        return cls(domain, codomain, tuple(coeffs))

    # -- inspection --------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.domain)

    @cached_property
    def support(self) -> tuple[tuple[tuple[int, ...], int, Fraction], ...]:
        """Nonzero coefficients as (basis index tuple, output index, value)."""
        dims = [sp.dim for sp in self.domain]
        cod = self.codomain.dim
        out: list[tuple[tuple[int, ...], int, Fraction]] = []
        for flat, c in enumerate(self.coeffs):
            if not c:
                continue
            j = flat % cod
            rest = flat // cod
            args = [0] * len(dims)
            for t in range(len(dims) - 1, -1, -1):
                rest, args[t] = divmod(rest, dims[t])
            out.append((tuple(args), j, c))
        return tuple(out)

    def coeff(self, args: Sequence[int], out: int) -> Fraction:
        dims = [sp.dim for sp in self.domain]
        flat = 0
        for t, i in enumerate(args):
            if not 0 <= i < dims[t]:
                raise IndexError(args)
            flat = flat * dims[t] + i
        return self.coeffs[flat * self.codomain.dim + out]

    def value_on_basis(self, args: Sequence[int]) -> Vector:
        """The image of a basis tuple, as a vector in the codomain."""
        dims = [sp.dim for sp in self.domain]
        if len(args) != len(dims):
            raise ValueError("wrong number of basis indices")
        flat = 0
        for t, i in enumerate(args):
            if not 0 <= i < dims[t]:
                raise IndexError(args)
            flat = flat * dims[t] + i
        cod = self.codomain.dim
        return self.coeffs[flat * cod:(flat + 1) * cod]

    def apply(self, args: Sequence[Vector]) -> Vector:
        """Multilinear evaluation on arbitrary vectors."""
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        for t, sp in enumerate(self.domain):
            if len(args[t]) != sp.dim:
                raise ValueError(f"argument {t} has length {len(args[t])}, expected {sp.dim}")
        out = [_ZERO] * self.codomain.dim
        for idx, j, c in self.support:
            term = c
            for t, i in enumerate(idx):
                x = args[t][i]
                if not x:
                    term = _ZERO
                    break
                term *= x
            if term:
                out[j] += term
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.support

    def first_nonzero(self) -> tuple[tuple[int, ...], int] | None:
        """Witness (basis tuple, output index) of the first nonzero coefficient."""
        if not self.support:
            return None
        args, j, _ = self.support[0]
        return args, j

    # -- arithmetic ---------------------------------------------------------

    def _check_shape(self, other: "MultilinearMap"):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("maps have different shapes")

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._check_shape(other)
        return MultilinearMap(self.domain, self.codomain,
                              tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._check_shape(other)
        return MultilinearMap(self.domain, self.codomain,
                              tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "MultilinearMap":
        return MultilinearMap(self.domain, self.codomain, tuple(-a for a in self.coeffs))

    def scale(self, c) -> "MultilinearMap":
        c = as_scalar(c)
        return MultilinearMap(self.domain, self.codomain, tuple(c * a for a in self.coeffs))

    def __rmul__(self, c) -> "MultilinearMap":
        return self.scale(c)


def compose_linear(outer: MultilinearMap, inner: MultilinearMap) -> MultilinearMap:
    """Composition outer(inner(x)) of two arity-1 maps."""
    if outer.arity != 1 or inner.arity != 1:
        raise ValueError("compose_linear needs arity-1 maps")
    if inner.codomain != outer.domain[0]:
        raise ValueError("inner codomain does not match outer domain")
    return MultilinearMap.from_function(inner.domain, outer.codomain,
                                        lambda x: outer.apply([inner.apply([x])]))
