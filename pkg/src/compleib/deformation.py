"""First-order deformations and Nijenhuis operators for compatible pairs.

A pair of bilinear directions (mu, m) deforms a compatible algebra to
(bracket1 + t*mu, bracket2 + t*m); it stays compatible for every t exactly
when six graded-bracket conditions vanish.  The first three say (mu, m) is a
level-2 cocycle, the last three say (mu, m) is itself a compatible structure.

A linear operator N is Nijenhuis for a bracket when its torsion

    T(x, y) = N([x, y]_N) - [N x, N y],
    [x, y]_N = [x, N y] + [N x, y] - N [x, y]

vanishes; Nijenhuis operators generate exactly the trivial deformations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (CompatibleLeibnizAlgebra, check_compatible_algebra,
                      compatible_algebra_violations)
from .balavoine import bracket
from .tensor import MultilinearMap, vadd, vsub


@dataclass(frozen=True)
class InfinitesimalDeformation:
    """The base algebra plus first-order directions for each bracket."""

    base: CompatibleLeibnizAlgebra
    direction1: MultilinearMap
    direction2: MultilinearMap

    def __post_init__(self):
        shape = ((self.base.space, self.base.space), self.base.space)
        for f in (self.direction1, self.direction2):
            if (f.domain, f.codomain) != shape:
                raise ValueError("directions must be binary self-maps of the base space")


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    holds: bool
    witness: tuple[int, ...] | None


def _condition(name: str, defect: MultilinearMap) -> ConditionCheck:
    hit = defect.first_nonzero()
    return ConditionCheck(name, hit is None, None if hit is None else hit[0])


@dataclass(frozen=True)
class DeformationReport:
    """The six bracket conditions, in order; the first three form the cocycle part."""

    conditions: tuple[ConditionCheck, ...]

    @property
    def is_cocycle(self) -> bool:
        return all(c.holds for c in self.conditions[:3])

    @property
    def is_deformation(self) -> bool:
        return all(c.holds for c in self.conditions)

    def failures(self) -> list[ConditionCheck]:
        return [c for c in self.conditions if not c.holds]


def check_deformation(d: InfinitesimalDeformation) -> DeformationReport:
    """Evaluate all six conditions exactly, with a witness tuple per failure."""
    b1, b2 = d.base.bracket1, d.base.bracket2
    mu, m = d.direction1, d.direction2
    return DeformationReport((
        _condition("[b1,dir1]", bracket(b1, mu)),
        _condition("[b2,dir2]", bracket(b2, m)),
        _condition("[b1,dir2]+[dir1,b2]", bracket(b1, m) + bracket(mu, b2)),
        _condition("[dir1,dir1]", bracket(mu, mu)),
        _condition("[dir2,dir2]", bracket(m, m)),
        _condition("[dir1,dir2]", bracket(mu, m)),
    ))


def deformed_bracket(pi: MultilinearMap, op: MultilinearMap) -> MultilinearMap:
    """[x,y]_N = [x, N y] + [N x, y] - N [x, y]; equals the graded bracket [pi, N]."""
    g = pi.codomain
    if pi.domain != (g, g):
        raise ValueError("expected a binary self-map")
    if op.domain != (g,) or op.codomain != g:
        raise ValueError("expected a linear operator on the same space")

    def formula(x, y):
        return vsub(vadd(pi.apply([x, op.apply([y])]),
                         pi.apply([op.apply([x]), y])),
                    op.apply([pi.apply([x, y])]))

    return MultilinearMap.from_function((g, g), g, formula)


def nijenhuis_torsion(pi: MultilinearMap, op: MultilinearMap) -> MultilinearMap:
    """T(x,y) = N([x,y]_N) - [N x, N y]; zero iff N is Nijenhuis for pi."""
    deformed = deformed_bracket(pi, op)
    g = pi.codomain

    def torsion(x, y):
        return vsub(op.apply([deformed.apply([x, y])]),
                    pi.apply([op.apply([x]), op.apply([y])]))

    return MultilinearMap.from_function((g, g), g, torsion)


def is_nijenhuis(a: CompatibleLeibnizAlgebra, op: MultilinearMap) -> bool:
    """Whether op is Nijenhuis for both brackets of the compatible pair."""
    return (nijenhuis_torsion(a.bracket1, op).is_zero()
            and nijenhuis_torsion(a.bracket2, op).is_zero())


def deform_by_nijenhuis(a: CompatibleLeibnizAlgebra, op: MultilinearMap
                        ) -> tuple[CompatibleLeibnizAlgebra, InfinitesimalDeformation]:
    """The deformed compatible algebra (both brackets twisted by N) and the
    trivial deformation it generates.

    Raises when op is not Nijenhuis.  The deformed pair is re-verified through
    the axiom checkers before being returned.
    """
    if not is_nijenhuis(a, op):
        raise ValueError("operator is not Nijenhuis for both brackets")
    twisted = CompatibleLeibnizAlgebra(a.space,
                                       deformed_bracket(a.bracket1, op),
                                       deformed_bracket(a.bracket2, op))
    if not check_compatible_algebra(twisted):
        raise AssertionError(
            f"twisted pair fails axioms: {compatible_algebra_violations(twisted)}")
    return twisted, InfinitesimalDeformation(a, twisted.bracket1, twisted.bracket2)


def pencil_torsion_check(a: CompatibleLeibnizAlgebra, op: MultilinearMap,
                         k1, k2) -> bool:
    """Torsion of k1*b1 + k2*b2 equals k1*T_{b1} + k2*T_{b2}; exact identity check."""
    combined = a.bracket1.scale(k1) + a.bracket2.scale(k2)
    lhs = nijenhuis_torsion(combined, op)
    rhs = (nijenhuis_torsion(a.bracket1, op).scale(k1)
           + nijenhuis_torsion(a.bracket2, op).scale(k2))
    return lhs == rhs


def trivial_deformation_conditions(d: InfinitesimalDeformation, op: MultilinearMap
                                   ) -> tuple[ConditionCheck, ...]:
    """The four conditions making Id + tN a homomorphism onto the base.

    Conditions 1/2: each direction is the corresponding twisted bracket.
    Conditions 3/4: N carries each direction onto the bracket of N-images.
    """
    a = d.base
    g = a.space

    def absorbs(direction, pi):
        def defect(x, y):
            return vsub(op.apply([direction.apply([x, y])]),
                        pi.apply([op.apply([x]), op.apply([y])]))
        return MultilinearMap.from_function((g, g), g, defect)

    return (
        _condition("dir1=[.,.]_N", d.direction1 - deformed_bracket(a.bracket1, op)),
        _condition("dir2={.,.}_N", d.direction2 - deformed_bracket(a.bracket2, op)),
        _condition("N.dir1=[N,N]", absorbs(d.direction1, a.bracket1)),
        _condition("N.dir2={N,N}", absorbs(d.direction2, a.bracket2)),
    )


def deformations_equivalent(d: InfinitesimalDeformation, d2: InfinitesimalDeformation,
                            op: MultilinearMap) -> bool:
    """Whether Id + tN maps the first deformation onto the second.

    Both deformations must share a base, which makes the two base-bracket
    conditions of the definition automatic; the remaining six are checked on
    all basis pairs.
    """
    if d.base != d2.base:
        raise ValueError("equivalence is defined for deformations of one base")
    a = d.base
    g = a.space

    for direction, direction2, pi in ((d.direction1, d2.direction1, a.bracket1),
                                      (d.direction2, d2.direction2, a.bracket2)):
        # difference condition: dir - dir' = [.,.]_N
        if direction - direction2 != deformed_bracket(pi, op):
            return False

        # N dir(x,y) = dir'(x, N y) + dir'(N x, y) + [N x, N y]
        def crossed(x, y):
            return vsub(op.apply([direction.apply([x, y])]),
                        vadd(vadd(direction2.apply([x, op.apply([y])]),
                                  direction2.apply([op.apply([x]), y])),
                             pi.apply([op.apply([x]), op.apply([y])])))

        if not MultilinearMap.from_function((g, g), g, crossed).is_zero():
            return False

        # dir'(N x, N y) = 0
        def top_order(x, y):
            return direction2.apply([op.apply([x]), op.apply([y])])

        if not MultilinearMap.from_function((g, g), g, top_order).is_zero():
            return False
    return True
