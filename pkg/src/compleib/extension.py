"""Abelian extensions of compatible Leibniz algebras.

An abelian extension of a compatible algebra L by a space V is a compatible
structure on the block space L (+) V whose brackets vanish on V (x) V and
project onto the base brackets.  Given a representation of L on V and a pair
of bilinear maps (theta1, theta2): L (x) L -> V, the candidate brackets are

    [x+u, y+v] = [x,y] + theta1(x,y) + left1(x,v) + right1(u,y)
    {x+u, y+v} = {x,y} + theta2(x,y) + left2(x,v) + right2(u,y)

and they satisfy the compatible-algebra axioms exactly when (theta1, theta2)
is a level-2 cocycle with coefficients in the representation.  Sections,
induced representations, extracted cocycles, and equivalences all work in the
block basis (L-block first), which makes the inclusion/projection maps purely
index-structural.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import (CompatibleLeibnizAlgebra, CompatibleRepresentation,
                      check_compatible_algebra, is_homomorphism)
from .cohomology import Cochain, d_rep_compatible
from .tensor import BasedSpace, MultilinearMap, basis_vector, direct_sum, vsub


@dataclass(frozen=True)
class CocyclePair:
    """The two V-valued bilinear components of a candidate level-2 cocycle."""

    part1: MultilinearMap  # L (x) L -> V
    part2: MultilinearMap

    def __post_init__(self):
        if (self.part1.domain, self.part1.codomain) != (self.part2.domain, self.part2.codomain):
            raise ValueError("cocycle parts must share a shape")
        if self.part1.arity != 2:
            raise ValueError("cocycle parts must be binary")

    def as_cochain(self) -> Cochain:
        return Cochain((self.part1, self.part2))

    @classmethod
    def zero(cls, L: BasedSpace, V: BasedSpace) -> "CocyclePair":
        z = MultilinearMap.zero((L, L), V)
        return cls(z, z)


@dataclass(frozen=True)
class AbelianExtension:
    """A compatible structure on L (+) V in block basis, with its exact sequence."""

    total: CompatibleLeibnizAlgebra
    base: CompatibleLeibnizAlgebra
    fiber: BasedSpace
    inclusion: MultilinearMap   # V -> total
    projection: MultilinearMap  # total -> L


class InvalidSectionError(ValueError):
    pass


def _block_inclusion(L: BasedSpace, V: BasedSpace, total: BasedSpace) -> MultilinearMap:
    return MultilinearMap.from_entries((V,), total,
                                       [((u,), L.dim + u, 1) for u in range(V.dim)])


def _block_projection(L: BasedSpace, V: BasedSpace, total: BasedSpace) -> MultilinearMap:
    return MultilinearMap.from_entries((total,), L,
                                       [((i,), i, 1) for i in range(L.dim)])


def build_extension(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation,
                    c: CocyclePair) -> AbelianExtension:
    """Assemble the block brackets; no axiom is verified here.

    The result passes the compatible-algebra checks exactly when c is a
    2-cocycle, and negative tests rely on being able to build the broken
    structure first.
    """
    L, V = a.space, r.space
    if c.part1.domain != (L, L) or c.part1.codomain != V:
        raise ValueError("cocycle parts must map L (x) L into the fiber")
    total = direct_sum(L, V)

    def block_bracket(base_bracket, theta, ml, mr):
        entries = []
        for (i, j), k, coeff in base_bracket.support:
            entries.append(((i, j), k, coeff))
        for (i, j), w, coeff in theta.support:
            entries.append(((i, j), L.dim + w, coeff))
        for (i, u), w, coeff in ml.support:
            entries.append(((i, L.dim + u), L.dim + w, coeff))
        for (u, j), w, coeff in mr.support:
            entries.append(((L.dim + u, j), L.dim + w, coeff))
        return MultilinearMap.from_entries((total, total), total, entries)

    total_algebra = CompatibleLeibnizAlgebra(
        total,
        block_bracket(a.bracket1, c.part1, r.left1, r.right1),
        block_bracket(a.bracket2, c.part2, r.left2, r.right2),
    )
    return AbelianExtension(total_algebra, a, V,
                            _block_inclusion(L, V, total),
                            _block_projection(L, V, total))


def check_extension(e: AbelianExtension) -> bool:
    """Block-structure sanity: abelian fiber, base as quotient, total axioms."""
    L, V = e.base.space, e.fiber
    for total_b, base_b in ((e.total.bracket1, e.base.bracket1),
                            (e.total.bracket2, e.base.bracket2)):
        for args, out, _ in total_b.support:
            if all(x >= L.dim for x in args):
                return False  # fiber is not abelian (or acts from V (x) V)
            if out < L.dim and any(x >= L.dim for x in args):
                return False  # projection would not be a homomorphism
        for i in range(L.dim):
            for j in range(L.dim):
                value = total_b.value_on_basis((i, j))[:L.dim]
                if value != base_b.value_on_basis((i, j)):
                    return False
    return check_compatible_algebra(e.total)


def is_2cocycle(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation,
                c: CocyclePair) -> bool:
    """Whether the level-2 differential with coefficients in r kills (part1, part2)."""
    return d_rep_compatible(a, r, c.as_cochain()).is_zero()


def canonical_section(e: AbelianExtension) -> MultilinearMap:
    """s(x) = (x, 0) in block coordinates."""
    L = e.base.space
    return MultilinearMap.from_entries((L,), e.total.space,
                                       [((i,), i, 1) for i in range(L.dim)])


def section_from_shift(e: AbelianExtension, phi: MultilinearMap) -> MultilinearMap:
    """s(x) = (x, phi(x)) for a linear shift phi: L -> V."""
    L, V = e.base.space, e.fiber
    if phi.domain != (L,) or phi.codomain != V:
        raise ValueError("shift must map the base into the fiber")
    entries = [((i,), i, 1) for i in range(L.dim)]
    for (i,), w, c in phi.support:
        entries.append(((i,), L.dim + w, c))
    return MultilinearMap.from_entries((L,), e.total.space, entries)


def is_section(e: AbelianExtension, s: MultilinearMap) -> bool:
    if s.domain != (e.base.space,) or s.codomain != e.total.space:
        return False
    L = e.base.space
    return all(s.value_on_basis((i,))[:L.dim] == basis_vector(L, i)
               for i in range(L.dim))


def _require_section(e: AbelianExtension, s: MultilinearMap):
    if not is_section(e, s):
        raise InvalidSectionError("not a section: projection . s != id")


def _fiber_part(e: AbelianExtension, value, context: str):
    L = e.base.space
    if any(x != 0 for x in value[:L.dim]):
        raise ValueError(f"{context} does not land in the fiber; "
                         "the total structure is not an abelian extension")
    return value[L.dim:]


def induced_representation(e: AbelianExtension, s: MultilinearMap
                           ) -> CompatibleRepresentation:
    """Actions left_i(x, u) = bracket_i(s x, u), right_i(u, x) = bracket_i(u, s x).

    Independent of the choice of section, because two sections differ by a
    fiber-valued map and the fiber brackets vanish.
    """
    _require_section(e, s)
    L, V = e.base.space, e.fiber
    inc = e.inclusion

    def action(total_bracket, left: bool):
        def fn(x, u):
            sx = s.apply([x])
            iu = inc.apply([u])
            value = total_bracket.apply([sx, iu] if left else [iu, sx])
            return _fiber_part(e, value, "an action value")
        domain = (L, V) if left else (V, L)
        if left:
            return MultilinearMap.from_function(domain, V, fn)
        return MultilinearMap.from_function(domain, V, lambda u, x: fn(x, u))

    return CompatibleRepresentation(
        e.base, V,
        action(e.total.bracket1, True), action(e.total.bracket1, False),
        action(e.total.bracket2, True), action(e.total.bracket2, False),
    )


def extract_cocycle(e: AbelianExtension, s: MultilinearMap) -> CocyclePair:
    """theta_i(x, y) = bracket_i(s x, s y) - s(bracket_i(x, y)), read in the fiber."""
    _require_section(e, s)
    L, V = e.base.space, e.fiber

    def component(total_bracket, base_bracket):
        def fn(x, y):
            value = vsub(total_bracket.apply([s.apply([x]), s.apply([y])]),
                         s.apply([base_bracket.apply([x, y])]))
            return _fiber_part(e, value, "a cocycle value")
        return MultilinearMap.from_function((L, L), V, fn)

    return CocyclePair(component(e.total.bracket1, e.base.bracket1),
                       component(e.total.bracket2, e.base.bracket2))


def _linear_matrix(f: MultilinearMap) -> linalg.Matrix:
    return linalg.Matrix.from_columns(
        [f.value_on_basis((i,)) for i in range(f.domain[0].dim)])


def extensions_equivalent(e1: AbelianExtension, e2: AbelianExtension,
                          F: MultilinearMap) -> bool:
    """Whether the linear map F is an equivalence of extensions.

    F must be bijective, a homomorphism for both total brackets, restrict to
    the identity on the fiber (F . i1 = i2), and cover the identity on the
    base (p2 . F = p1).
    """
    if e1.base != e2.base or e1.fiber != e2.fiber:
        raise ValueError("extensions do not share a base and fiber")
    if F.domain != (e1.total.space,) or F.codomain != e2.total.space:
        raise ValueError("map does not go between the two total spaces")
    total_dim = e1.total.space.dim
    if linalg.rank(_linear_matrix(F)) != total_dim:
        return False
    if not is_homomorphism(F, e1.total, e2.total):
        return False
    for u in range(e1.fiber.dim):
        left = F.apply([e1.inclusion.value_on_basis((u,))])
        if left != e2.inclusion.value_on_basis((u,)):
            return False
    for t in range(total_dim):
        if e2.projection.apply([F.value_on_basis((t,))]) != e1.projection.value_on_basis((t,)):
            return False
    return True


def equivalence_from_cohomologous(a: CompatibleLeibnizAlgebra,
                                  r: CompatibleRepresentation,
                                  c1: CocyclePair, c2: CocyclePair,
                                  phi: MultilinearMap) -> MultilinearMap:
    """The block map psi(x + u) = x + u + phi(x), checked against c1 - c2 = d(phi).

    Raises when phi does not witness that the cocycles are cohomologous.
    """
    L, V = a.space, r.space
    if phi.domain != (L,) or phi.codomain != V:
        raise ValueError("the witness must be a linear map from the base to the fiber")
    difference = c1.as_cochain() - c2.as_cochain()
    if difference != d_rep_compatible(a, r, Cochain((phi,))):
        raise ValueError("phi does not witness that the cocycles are cohomologous")
    total = direct_sum(L, V)
    entries = [((t,), t, 1) for t in range(total.dim)]
    for (i,), w, c in phi.support:
        entries.append(((i,), L.dim + w, c))
    return MultilinearMap.from_entries((total,), total, entries)
