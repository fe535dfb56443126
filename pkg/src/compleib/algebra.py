"""Leibniz algebras, compatible pairs, bimodules, and their axiom checkers.

A Leibniz algebra is a space L with a bilinear bracket satisfying

    [x, [y, z]] = [[x, y], z] + [y, [x, z]]

and a compatible pair carries two such brackets whose every linear
combination k1*[.,.] + k2*{.,.} is again Leibniz; elementwise this is

    [x,{y,z}] + {x,[y,z]} = [{x,y},z] + {[x,y],z} + [y,{x,z}] + {y,[x,z]}.

All checks run on basis tuples only: the identities are multilinear, so basis
verification is complete.  Constructors never verify axioms (negative tests
feed deliberately broken structures through the same checkers); every check
has a ``*_violations`` sibling that reports which axiom failed and at which
basis tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tensor import BasedSpace, MultilinearMap, vadd, vsub, zero_vector

Witness = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class LeibnizAlgebra:
    space: BasedSpace
    bracket: MultilinearMap


@dataclass(frozen=True)
class CompatibleLeibnizAlgebra:
    """One space carrying two Leibniz brackets subject to the compatibility law."""

    space: BasedSpace
    bracket1: MultilinearMap
    bracket2: MultilinearMap

    def first(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.space, self.bracket1)

    def second(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.space, self.bracket2)


@dataclass(frozen=True)
class Bimodule:
    """Left/right actions of a Leibniz algebra on a space M."""

    base: LeibnizAlgebra
    space: BasedSpace
    left_action: MultilinearMap   # L (x) M -> M
    right_action: MultilinearMap  # M (x) L -> M


@dataclass(frozen=True)
class CompatibleRepresentation:
    """Four actions: a bimodule over each bracket plus mixed compatibilities."""

    base: CompatibleLeibnizAlgebra
    space: BasedSpace
    left1: MultilinearMap
    right1: MultilinearMap
    left2: MultilinearMap
    right2: MultilinearMap

    def bimodule1(self) -> Bimodule:
        return Bimodule(self.base.first(), self.space, self.left1, self.right1)

    def bimodule2(self) -> Bimodule:
        return Bimodule(self.base.second(), self.space, self.left2, self.right2)

    @classmethod
    def adjoint(cls, algebra: CompatibleLeibnizAlgebra) -> "CompatibleRepresentation":
        """The algebra acting on itself by both brackets on both sides."""
        return cls(algebra, algebra.space,
                   algebra.bracket1, algebra.bracket1,
                   algebra.bracket2, algebra.bracket2)


def _check_binary_on(pi: MultilinearMap) -> BasedSpace:
    if pi.arity != 2:
        raise ValueError("expected a binary map")
    g = pi.codomain
    if pi.domain != (g, g):
        raise ValueError("expected a map L (x) L -> L")
    return g


def leibniz_defect(pi: MultilinearMap) -> MultilinearMap:
    """D(x,y,z) = pi(x,pi(y,z)) - pi(pi(x,y),z) - pi(y,pi(x,z)); zero iff Leibniz."""
    g = _check_binary_on(pi)

    def defect(x, y, z):
        return vsub(pi.apply([x, pi.apply([y, z])]),
                    vadd(pi.apply([pi.apply([x, y]), z]),
                         pi.apply([y, pi.apply([x, z])])))

    return MultilinearMap.from_function((g, g, g), g, defect)


def check_leibniz(pi: MultilinearMap) -> bool:
    return leibniz_defect(pi).is_zero()


def compatibility_defect(pi1: MultilinearMap, pi2: MultilinearMap) -> MultilinearMap:
    """Elementwise defect of the mixed compatibility law; zero iff compatible."""
    g = _check_binary_on(pi1)
    if _check_binary_on(pi2) != g:
        raise ValueError("brackets live on different spaces")

    def defect(x, y, z):
        lhs = vadd(pi1.apply([x, pi2.apply([y, z])]),
                   pi2.apply([x, pi1.apply([y, z])]))
        rhs = vadd(vadd(pi1.apply([pi2.apply([x, y]), z]),
                        pi2.apply([pi1.apply([x, y]), z])),
                   vadd(pi1.apply([y, pi2.apply([x, z])]),
                        pi2.apply([y, pi1.apply([x, z])])))
        return vsub(lhs, rhs)

    return MultilinearMap.from_function((g, g, g), g, defect)


def check_compatibility(pi1: MultilinearMap, pi2: MultilinearMap) -> bool:
    """True iff the mixed law holds; equivalent to the graded bracket [pi1,pi2] vanishing."""
    return compatibility_defect(pi1, pi2).is_zero()


def pencil(pi1: MultilinearMap, pi2: MultilinearMap, k1, k2) -> MultilinearMap:
    """The combination k1*pi1 + k2*pi2; Leibniz for every (k1,k2) iff the pair is compatible."""
    g = _check_binary_on(pi1)
    if _check_binary_on(pi2) != g:
        raise ValueError("brackets live on different spaces")
    return pi1.scale(k1) + pi2.scale(k2)


def check_compatible_algebra(a: CompatibleLeibnizAlgebra) -> bool:
    return (check_leibniz(a.bracket1) and check_leibniz(a.bracket2)
            and check_compatibility(a.bracket1, a.bracket2))


def compatible_algebra_violations(a: CompatibleLeibnizAlgebra) -> list[Witness]:
    """(axiom name, basis tuple) for each failed axiom of the compatible pair."""
    out: list[Witness] = []
    for name, defect in (("leibniz1", leibniz_defect(a.bracket1)),
                         ("leibniz2", leibniz_defect(a.bracket2)),
                         ("compatibility", compatibility_defect(a.bracket1, a.bracket2))):
        hit = defect.first_nonzero()
        if hit is not None:
            out.append((name, hit[0]))
    return out


def _bimodule_defects(base_bracket: MultilinearMap, space: BasedSpace,
                      ml: MultilinearMap, mr: MultilinearMap) -> dict[str, MultilinearMap]:
    L = base_bracket.codomain
    M = space
    if ml.domain != (L, M) or ml.codomain != M:
        raise ValueError("left action must map L (x) M -> M")
    if mr.domain != (M, L) or mr.codomain != M:
        raise ValueError("right action must map M (x) L -> M")

    def llm(x, y, m):
        return vsub(ml.apply([x, ml.apply([y, m])]),
                    vadd(ml.apply([base_bracket.apply([x, y]), m]),
                         ml.apply([y, ml.apply([x, m])])))

    def lml(x, m, y):
        return vsub(ml.apply([x, mr.apply([m, y])]),
                    vadd(mr.apply([ml.apply([x, m]), y]),
                         mr.apply([m, base_bracket.apply([x, y])])))

    def mll(m, x, y):
        return vsub(mr.apply([m, base_bracket.apply([x, y])]),
                    vadd(mr.apply([mr.apply([m, x]), y]),
                         ml.apply([x, mr.apply([m, y])])))

    return {
        "LLM": MultilinearMap.from_function((L, L, M), M, llm),
        "LML": MultilinearMap.from_function((L, M, L), M, lml),
        "MLL": MultilinearMap.from_function((M, L, L), M, mll),
    }


def bimodule_violations(b: Bimodule) -> list[Witness]:
    out: list[Witness] = []
    for name, defect in _bimodule_defects(b.base.bracket, b.space,
                                          b.left_action, b.right_action).items():
        hit = defect.first_nonzero()
        if hit is not None:
            out.append((name, hit[0]))
    return out


def check_bimodule(b: Bimodule) -> bool:
    return not bimodule_violations(b)


def _mixed_defects(a: CompatibleLeibnizAlgebra, r: CompatibleRepresentation
                   ) -> dict[str, MultilinearMap]:
    L, M = a.space, r.space
    b1, b2 = a.bracket1, a.bracket2
    ml1, mr1, ml2, mr2 = r.left1, r.right1, r.left2, r.right2

    def llm(x, y, m):
        lhs = vadd(ml1.apply([x, ml2.apply([y, m])]),
                   ml2.apply([x, ml1.apply([y, m])]))
        rhs = vadd(vadd(ml1.apply([b2.apply([x, y]), m]),
                        ml2.apply([b1.apply([x, y]), m])),
                   vadd(ml1.apply([y, ml2.apply([x, m])]),
                        ml2.apply([y, ml1.apply([x, m])])))
        return vsub(lhs, rhs)

    def lml(x, m, y):
        lhs = vadd(ml1.apply([x, mr2.apply([m, y])]),
                   ml2.apply([x, mr1.apply([m, y])]))
        rhs = vadd(vadd(mr1.apply([ml2.apply([x, m]), y]),
                        mr2.apply([ml1.apply([x, m]), y])),
                   vadd(mr1.apply([m, b2.apply([x, y])]),
                        mr2.apply([m, b1.apply([x, y])])))
        return vsub(lhs, rhs)

    def mll(m, x, y):
        lhs = vadd(mr1.apply([m, b2.apply([x, y])]),
                   mr2.apply([m, b1.apply([x, y])]))
        rhs = vadd(vadd(mr1.apply([mr2.apply([m, x]), y]),
                        mr2.apply([mr1.apply([m, x]), y])),
                   vadd(ml1.apply([x, mr2.apply([m, y])]),
                        ml2.apply([x, mr1.apply([m, y])])))
        return vsub(lhs, rhs)

    return {
        "mixed.LLM": MultilinearMap.from_function((L, L, M), M, llm),
        "mixed.LML": MultilinearMap.from_function((L, M, L), M, lml),
        "mixed.MLL": MultilinearMap.from_function((M, L, L), M, mll),
    }


def compatible_representation_violations(r: CompatibleRepresentation) -> list[Witness]:
    out: list[Witness] = []
    for prefix, bim in (("1", r.bimodule1()), ("2", r.bimodule2())):
        for name, args in bimodule_violations(bim):
            out.append((f"{prefix}.{name}", args))
    for name, defect in _mixed_defects(r.base, r).items():
        hit = defect.first_nonzero()
        if hit is not None:
            out.append((name, hit[0]))
    return out


def check_compatible_representation(r: CompatibleRepresentation) -> bool:
    return not compatible_representation_violations(r)


def semidirect_product(b: Bimodule) -> LeibnizAlgebra:
    """The Leibniz algebra on L (+) M with [(x,u),(y,v)] = ([x,y], ml(x,v) + mr(u,y)).

    Raises when the bimodule axioms fail, since the result would not be Leibniz.
    """
    violations = bimodule_violations(b)
    if violations:
        raise ValueError(f"bimodule axioms fail: {violations}")
    L, M = b.base.space, b.space
    total = BasedSpace(L.dim + M.dim, f"{L.label}+{M.label}")
    entries = []
    for (i, j), k, c in b.base.bracket.support:
        entries.append(((i, j), k, c))
    for (i, u), w, c in b.left_action.support:
        entries.append(((i, L.dim + u), L.dim + w, c))
    for (u, j), w, c in b.right_action.support:
        entries.append(((L.dim + u, j), L.dim + w, c))
    return LeibnizAlgebra(total, MultilinearMap.from_entries((total, total), total, entries))


def is_homomorphism(phi: MultilinearMap, a: CompatibleLeibnizAlgebra,
                    b: CompatibleLeibnizAlgebra) -> bool:
    """Whether the linear map phi intertwines both brackets of a and b."""
    if phi.arity != 1 or phi.domain != (a.space,) or phi.codomain != b.space:
        raise ValueError("expected a linear map from the first algebra to the second")
    for pa, pb in ((a.bracket1, b.bracket1), (a.bracket2, b.bracket2)):
        def defect(x, y):
            return vsub(phi.apply([pa.apply([x, y])]),
                        pb.apply([phi.apply([x]), phi.apply([y])]))
        if not MultilinearMap.from_function((a.space, a.space), b.space, defect).is_zero():
            return False
    return True
