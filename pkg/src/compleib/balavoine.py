"""Shuffle combinatorics and the graded bracket on multilinear self-maps.

For a vector space g write C^n for the n-ary multilinear maps g^n -> g; an
element of C^n has degree n-1.  For P of degree p and Q of degree q the
partial composition at slot k (1-based, 1 <= k <= p+1) is

    (P o_k Q)(x_1, ..., x_{p+q+1})
        = sum over (k-1, q)-shuffles s of sign(s) *
            P(x_{s(1)}, ..., x_{s(k-1)},
              Q(x_{s(k)}, ..., x_{s(k+q-1)}, x_{k+q}),
              x_{k+q+1}, ..., x_{p+q+1})

where s permutes slots 1..k+q-1 only: Q's last argument sits at the fixed
slot k+q and P's trailing arguments are fixed as well.  From these,

    P o Q   = sum_{k=1}^{p+1} (-1)^{(k-1) q} P o_k Q
    [P,Q]   = P o Q - (-1)^{p q} Q o P

is a graded Lie bracket, and a bilinear map pi satisfies the Leibniz identity
exactly when [pi, pi] = 0.

The formulas above are 1-based; all storage is 0-based.  The translation
happens inside ``_scatter_circ_k`` and nowhere else.  Evaluation walks the
nonzero coefficients of P and Q and scatters signed products into the result
tensor, so sparse inputs stay cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .tensor import BasedSpace, MultilinearMap

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Shuffle:
    """An (i, n-i)-shuffle: ascending on its first i and last n-i positions."""

    n: int
    i: int
    perm: tuple[int, ...]  # 0-based images (perm[t] = s(t+1) - 1)
    sign: int


def _signature(perm: tuple[int, ...]) -> int:
    inversions = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def shuffles(i: int, n: int) -> tuple[Shuffle, ...]:
    """All (i, n-i)-shuffles of n symbols with their signs, in lexicographic order."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    out = []
    symbols = range(n)
    for head in itertools.combinations(symbols, i):
        tail = tuple(x for x in symbols if x not in head)
        perm = head + tail
        out.append(Shuffle(n=n, i=i, perm=perm, sign=_signature(perm)))
    return tuple(out)


def underlying_space(f: MultilinearMap) -> BasedSpace:
    """The single space g of a self-map g^n -> g; raises for mixed shapes."""
    g = f.codomain
    if any(sp != g for sp in f.domain):
        raise ValueError("map is not a self-map of a single space")
    return g


def degree(f: MultilinearMap) -> int:
    underlying_space(f)
    return f.arity - 1


def _scatter_circ_k(P: MultilinearMap, Q: MultilinearMap, k: int,
                    weight: Fraction, acc: dict[int, Fraction], dim: int) -> None:
    """Accumulate weight * (P o_k Q) into acc, keyed by flat result index.

    k is 1-based as in the defining formula; everything else here is 0-based:
    result slots 0..k+q-2 are shuffled, slot k+q-1 is Q's fixed last argument,
    slots k+q..p+q are P's fixed trailing arguments.
    """
    p = P.arity - 1
    q = Q.arity - 1
    n_result = p + q + 1
    q_by_out: dict[int, list[tuple[tuple[int, ...], Fraction]]] = {}
    for qargs, qout, qc in Q.support:
        q_by_out.setdefault(qout, []).append((qargs, qc))
    shs = shuffles(k - 1, k - 1 + q)
    for pargs, pout, pc in P.support:
        plug = pargs[k - 1]  # Q's output index consumed by P's slot k
        for qargs, qc in q_by_out.get(plug, ()):
            base = weight * pc * qc
            for sh in shs:
                perm = sh.perm
                t = [0] * n_result
                for idx in range(k - 1):
                    t[perm[idx]] = pargs[idx]
                for idx in range(q):
                    t[perm[k - 1 + idx]] = qargs[idx]
                t[k + q - 1] = qargs[q]
                for idx in range(p + 1 - k):
                    t[k + q + idx] = pargs[k + idx]
                flat = 0
                for i in t:
                    flat = flat * dim + i
                flat = flat * dim + pout
                acc[flat] = acc.get(flat, _ZERO) + sh.sign * base
    return None


def _materialize(space: BasedSpace, arity: int, acc: dict[int, Fraction]) -> MultilinearMap:
    size = space.dim ** (arity + 1)
    coeffs = [_ZERO] * size
    for flat, c in acc.items():
        if c:
            coeffs[flat] = c
    return MultilinearMap((space,) * arity, space, tuple(coeffs))


def _common_space(P: MultilinearMap, Q: MultilinearMap) -> BasedSpace:
    g = underlying_space(P)
    if underlying_space(Q) != g:
        raise ValueError("maps live on different spaces")
    return g


def circ_k(P: MultilinearMap, Q: MultilinearMap, k: int) -> MultilinearMap:
    """The partial composition P o_k Q, 1 <= k <= degree(P) + 1."""
    g = _common_space(P, Q)
    p = degree(P)
    if not 1 <= k <= p + 1:
        raise ValueError(f"slot k={k} out of range 1..{p + 1}")
    acc: dict[int, Fraction] = {}
    _scatter_circ_k(P, Q, k, Fraction(1), acc, g.dim)
    return _materialize(g, P.arity + Q.arity - 1, acc)


def _circ_acc(P: MultilinearMap, Q: MultilinearMap, weight: Fraction,
              acc: dict[int, Fraction], dim: int) -> None:
    p = degree(P)
    q = degree(Q)
    for k in range(1, p + 2):
        w = weight if ((k - 1) * q) % 2 == 0 else -weight
        _scatter_circ_k(P, Q, k, w, acc, dim)


def circ(P: MultilinearMap, Q: MultilinearMap) -> MultilinearMap:
    """The full composition P o Q = sum_k (-1)^{(k-1)q} P o_k Q."""
    g = _common_space(P, Q)
    acc: dict[int, Fraction] = {}
    _circ_acc(P, Q, Fraction(1), acc, g.dim)
    return _materialize(g, P.arity + Q.arity - 1, acc)


def bracket_entries(P: MultilinearMap, Q: MultilinearMap) -> dict[int, Fraction]:
    """Sparse accumulator for [P,Q]: flat result index -> coefficient.

    This is the kernel behind :func:`bracket`; callers that only need one
    block of the result (restricted differentials) can project it without
    materializing the dense tensor.
    """
    g = _common_space(P, Q)
    p = degree(P)
    q = degree(Q)
    acc: dict[int, Fraction] = {}
    _circ_acc(P, Q, Fraction(1), acc, g.dim)
    w = Fraction(-1) if (p * q) % 2 == 0 else Fraction(1)
    _circ_acc(Q, P, w, acc, g.dim)
    return acc


def bracket(P: MultilinearMap, Q: MultilinearMap) -> MultilinearMap:
    """The graded bracket [P,Q] = P o Q - (-1)^{pq} Q o P."""
    g = _common_space(P, Q)
    return _materialize(g, P.arity + Q.arity - 1, bracket_entries(P, Q))


def is_maurer_cartan(pi: MultilinearMap) -> bool:
    """Whether the degree-1 element pi satisfies [pi, pi] = 0."""
    if degree(pi) != 1:
        raise ValueError("Maurer-Cartan test needs a degree-1 (binary) map")
    return all(not c for c in bracket_entries(pi, pi).values())


def is_mc_pair(pi1: MultilinearMap, pi2: MultilinearMap) -> bool:
    """Whether [pi1,pi1] = [pi2,pi2] = [pi1,pi2] = 0 (both differentials zero)."""
    if degree(pi1) != 1 or degree(pi2) != 1:
        raise ValueError("Maurer-Cartan pair test needs degree-1 maps")
    _common_space(pi1, pi2)
    return (is_maurer_cartan(pi1) and is_maurer_cartan(pi2)
            and all(not c for c in bracket_entries(pi1, pi2).values()))
