"""Command-line front end and the structure-constant file format.

Input files are JSON with exact rational coefficients::

    {
      "dim": 2,
      "bracket1": [[0, 0, 1, "1"]],
      "bracket2": [[0, 0, 1, "1"]],
      "representations": {
        "adj": {"dim": 2,
                "ml1": [[0, 0, 1, "1"]], "mr1": [[0, 0, 1, "1"]],
                "ml2": [[0, 0, 1, "1"]], "mr2": [[0, 0, 1, "1"]]}
      },
      "cochains": {
        "N":     {"arity": 1, "values": "self", "entries": [[0, 1, "1"]]},
        "theta": {"arity": 2, "values": "adj",  "entries": [[0, 0, 0, "1/2"]]}
      }
    }

An entry ``[i_1, ..., i_n, k, coeff]`` adds ``coeff`` times basis vector k of
the target to the value on (e_{i_1}, ..., e_{i_n}); duplicate index tuples are
summed.  Indices are 0-based.  Coefficients are integers or strings "p" /
"p/q" -- floats are rejected, there is no approximate mode.  Bracket entries
target the algebra; ``ml1``/``mr1``/``ml2``/``mr2`` are the four actions of a
representation on its fiber; a cochain's ``values`` is either "self" or the
name of a representation.

Commands (results on stdout as stable ``key value`` lines, human-readable
summaries and diagnostics on stderr):

    check FILE
    cohomology FILE --n N --coefficients self|REP [--cap ENTRIES]
    deform FILE MU1 M1 [N]
    nijenhuis FILE N
    extend FILE REP THETA1 THETA2 OUT

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage, parse, or
size-cap errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import cohomology as coh
from . import linalg
from .algebra import (CompatibleLeibnizAlgebra, CompatibleRepresentation,
                      compatible_algebra_violations,
                      compatible_representation_violations)
from .deformation import (InfinitesimalDeformation, check_deformation,
                          nijenhuis_torsion, trivial_deformation_conditions)
from .extension import CocyclePair, build_extension, is_2cocycle
from .tensor import BasedSpace, MultilinearMap


class FileFormatError(Exception):
    """Malformed input file; the message carries the location."""


_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(raw, where: str) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise FileFormatError(f"{where}: coefficient must be an integer or 'p/q' string, "
                              f"got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str) and _RATIONAL.match(raw):
        return Fraction(raw)
    raise FileFormatError(f"{where}: malformed rational {raw!r}")


def _index(raw, bound: int, where: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise FileFormatError(f"{where}: index must be an integer, got {raw!r}")
    if not 0 <= raw < bound:
        raise FileFormatError(f"{where}: index {raw} out of range for dimension {bound}")
    return raw


def _parse_map(raw, domain: tuple[BasedSpace, ...], codomain: BasedSpace,
               where: str) -> MultilinearMap:
    if not isinstance(raw, list):
        raise FileFormatError(f"{where}: expected a list of entries")
    entries = []
    n = len(domain)
    for pos, entry in enumerate(raw):
        spot = f"{where} entry {pos}"
        if not isinstance(entry, list) or len(entry) != n + 2:
            raise FileFormatError(f"{spot}: expected [indices..., target, coeff] "
                                  f"of length {n + 2}")
        args = tuple(_index(entry[t], domain[t].dim, spot) for t in range(n))
        out = _index(entry[n], codomain.dim, spot)
        entries.append((args, out, parse_rational(entry[n + 1], spot)))
    return MultilinearMap.from_entries(domain, codomain, entries)


@dataclass(frozen=True)
class FileCochain:
    values: str  # "self" or a representation name
    map: MultilinearMap


@dataclass
class AlgebraFileModel:
    algebra: CompatibleLeibnizAlgebra
    representations: dict[str, CompatibleRepresentation] = field(default_factory=dict)
    cochains: dict[str, FileCochain] = field(default_factory=dict)


def parse_algebra_text(text: str) -> AlgebraFileModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise FileFormatError("top level must be a JSON object")

    dim = raw.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise FileFormatError("'dim' must be a nonnegative integer")
    L = BasedSpace(dim, "L")

    unknown = set(raw) - {"dim", "bracket1", "bracket2", "representations", "cochains"}
    if unknown:
        raise FileFormatError(f"unknown top-level keys: {sorted(unknown)}")

    algebra = CompatibleLeibnizAlgebra(
        L,
        _parse_map(raw.get("bracket1", []), (L, L), L, "bracket1"),
        _parse_map(raw.get("bracket2", []), (L, L), L, "bracket2"),
    )

    representations: dict[str, CompatibleRepresentation] = {}
    raw_reps = raw.get("representations", {})
    if not isinstance(raw_reps, dict):
        raise FileFormatError("'representations' must be an object")
    for name, rep in raw_reps.items():
        where = f"representation {name!r}"
        if not isinstance(rep, dict):
            raise FileFormatError(f"{where}: expected an object")
        fdim = rep.get("dim")
        if isinstance(fdim, bool) or not isinstance(fdim, int) or fdim < 0:
            raise FileFormatError(f"{where}: 'dim' must be a nonnegative integer")
        V = BasedSpace(fdim, name)
        extra = set(rep) - {"dim", "ml1", "mr1", "ml2", "mr2"}
        if extra:
            raise FileFormatError(f"{where}: unknown keys {sorted(extra)}")
        representations[name] = CompatibleRepresentation(
            algebra, V,
            _parse_map(rep.get("ml1", []), (L, V), V, f"{where}.ml1"),
            _parse_map(rep.get("mr1", []), (V, L), V, f"{where}.mr1"),
            _parse_map(rep.get("ml2", []), (L, V), V, f"{where}.ml2"),
            _parse_map(rep.get("mr2", []), (V, L), V, f"{where}.mr2"),
        )

    cochains: dict[str, FileCochain] = {}
    raw_cochains = raw.get("cochains", {})
    if not isinstance(raw_cochains, dict):
        raise FileFormatError("'cochains' must be an object")
    for name, spec in raw_cochains.items():
        where = f"cochain {name!r}"
        if not isinstance(spec, dict):
            raise FileFormatError(f"{where}: expected an object")
        arity = spec.get("arity")
        if isinstance(arity, bool) or not isinstance(arity, int) or arity < 1:
            raise FileFormatError(f"{where}: 'arity' must be a positive integer")
        values = spec.get("values", "self")
        if values == "self":
            codomain = L
        elif values in representations:
            codomain = representations[values].space
        else:
            raise FileFormatError(f"{where}: unknown values target {values!r}")
        extra = set(spec) - {"arity", "values", "entries"}
        if extra:
            raise FileFormatError(f"{where}: unknown keys {sorted(extra)}")
        cochains[name] = FileCochain(
            values, _parse_map(spec.get("entries", []), (L,) * arity, codomain, where))

    return AlgebraFileModel(algebra, representations, cochains)


def parse_algebra_file(path: str) -> AlgebraFileModel:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from None
    try:
        return parse_algebra_text(text)
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from None


def _entry_list(f: MultilinearMap) -> list[list]:
    return [[*args, out, str(c)] for args, out, c in sorted(f.support)]


def write_algebra_text(model: AlgebraFileModel) -> str:
    """Canonical serialization: sorted entries, lowest-term rational strings."""
    doc: dict = {
        "dim": model.algebra.space.dim,
        "bracket1": _entry_list(model.algebra.bracket1),
        "bracket2": _entry_list(model.algebra.bracket2),
    }
    if model.representations:
        doc["representations"] = {
            name: {"dim": rep.space.dim,
                   "ml1": _entry_list(rep.left1), "mr1": _entry_list(rep.right1),
                   "ml2": _entry_list(rep.left2), "mr2": _entry_list(rep.right2)}
            for name, rep in model.representations.items()
        }
    if model.cochains:
        doc["cochains"] = {
            name: {"arity": c.map.arity, "values": c.values,
                   "entries": _entry_list(c.map)}
            for name, c in model.cochains.items()
        }
    return json.dumps(doc, indent=1) + "\n"


def write_algebra_file(model: AlgebraFileModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(write_algebra_text(model))


# ---------------------------------------------------------------------------
# commands


def _emit(line: str) -> None:
    print(line)


def _note(line: str) -> None:
    print(line, file=sys.stderr)


def _witness(args: tuple[int, ...]) -> str:
    return "witness=" + ",".join(str(i) for i in args)


def _self_cochain(model: AlgebraFileModel, name: str, arity: int) -> MultilinearMap:
    if name not in model.cochains:
        raise FileFormatError(f"no cochain named {name!r} in the file")
    c = model.cochains[name]
    if c.values != "self" or c.map.arity != arity:
        raise FileFormatError(f"cochain {name!r} must have arity {arity} and values 'self'")
    return c.map


def cmd_check(model: AlgebraFileModel) -> int:
    ok = True
    failed = {name: args for name, args in compatible_algebra_violations(model.algebra)}
    for name in ("leibniz1", "leibniz2", "compatibility"):
        if name in failed:
            ok = False
            _emit(f"check {name} fail {_witness(failed[name])}")
        else:
            _emit(f"check {name} pass")
    for rep_name, rep in model.representations.items():
        violations = compatible_representation_violations(rep)
        if violations:
            ok = False
            for axiom, args in violations:
                _emit(f"check representation {rep_name} {axiom} fail {_witness(args)}")
        else:
            _emit(f"check representation {rep_name} pass")
    _emit(f"result {'pass' if ok else 'fail'}")
    _note("all axioms hold" if ok else "some axioms fail; see witnesses above")
    return 0 if ok else 1


def cmd_cohomology(model: AlgebraFileModel, n: int, coefficients: str, cap: int) -> int:
    if coefficients == "self":
        rep = None
    elif coefficients in model.representations:
        rep = model.representations[coefficients]
    else:
        raise FileFormatError(f"no representation named {coefficients!r} in the file")
    a = model.algebra
    dn = coh.coboundary_matrix(a, n, rep=rep, cap=cap)
    kernel = dn.cols - linalg.rank(dn)
    image = 0 if n == 1 else linalg.rank(coh.coboundary_matrix(a, n - 1, rep=rep, cap=cap))
    _emit(f"n {n}")
    _emit(f"coefficients {coefficients}")
    _emit(f"ker {kernel}")
    _emit(f"im {image}")
    _emit(f"h {kernel - image}")
    _note(f"H^{n}({coefficients}) has dimension {kernel - image} "
          f"(cocycles {kernel}, coboundaries {image})")
    return 0


def cmd_deform(model: AlgebraFileModel, mu1: str, m1: str, operator: str | None) -> int:
    d = InfinitesimalDeformation(model.algebra,
                                 _self_cochain(model, mu1, 2),
                                 _self_cochain(model, m1, 2))
    report = check_deformation(d)
    ok = report.is_deformation
    for cond in report.conditions:
        extra = "" if cond.holds else f" {_witness(cond.witness)}"
        _emit(f"condition {cond.name} {'pass' if cond.holds else 'fail'}{extra}")
    _emit(f"cocycle {str(report.is_cocycle).lower()}")
    _emit(f"deformation {str(report.is_deformation).lower()}")
    if operator is not None:
        conditions = trivial_deformation_conditions(d, _self_cochain(model, operator, 1))
        for cond in conditions:
            extra = "" if cond.holds else f" {_witness(cond.witness)}"
            _emit(f"trivial-condition {cond.name} {'pass' if cond.holds else 'fail'}{extra}")
        trivial = all(c.holds for c in conditions)
        ok = ok and trivial
        _emit(f"trivial {str(trivial).lower()}")
    _emit(f"result {'pass' if ok else 'fail'}")
    _note("deformation conditions " + ("all hold" if ok else "fail; see report"))
    return 0 if ok else 1


def cmd_nijenhuis(model: AlgebraFileModel, name: str) -> int:
    op = _self_cochain(model, name, 1)
    ok = True
    for label, pi in (("torsion1", model.algebra.bracket1),
                      ("torsion2", model.algebra.bracket2)):
        torsion = nijenhuis_torsion(pi, op)
        hit = torsion.first_nonzero()
        if hit is None:
            _emit(f"{label} zero")
        else:
            ok = False
            _emit(f"{label} nonzero {_witness(hit[0])}")
    _emit(f"nijenhuis {str(ok).lower()}")
    _emit(f"result {'pass' if ok else 'fail'}")
    _note(f"{name} is {'a' if ok else 'not a'} Nijenhuis operator")
    return 0 if ok else 1


def cmd_extend(model: AlgebraFileModel, rep_name: str, theta1: str, theta2: str,
               out_path: str) -> int:
    if rep_name not in model.representations:
        raise FileFormatError(f"no representation named {rep_name!r} in the file")
    rep = model.representations[rep_name]

    def fiber_cochain(name):
        if name not in model.cochains:
            raise FileFormatError(f"no cochain named {name!r} in the file")
        c = model.cochains[name]
        if c.values != rep_name or c.map.arity != 2:
            raise FileFormatError(
                f"cochain {name!r} must be binary with values {rep_name!r}")
        return c.map

    pair = CocyclePair(fiber_cochain(theta1), fiber_cochain(theta2))
    valid = is_2cocycle(model.algebra, rep, pair)
    extension = build_extension(model.algebra, rep, pair)
    total = extension.total
    relabeled = CompatibleLeibnizAlgebra(
        BasedSpace(total.space.dim, "L"),
        MultilinearMap((BasedSpace(total.space.dim, "L"),) * 2,
                       BasedSpace(total.space.dim, "L"), total.bracket1.coeffs),
        MultilinearMap((BasedSpace(total.space.dim, "L"),) * 2,
                       BasedSpace(total.space.dim, "L"), total.bracket2.coeffs),
    )
    write_algebra_file(AlgebraFileModel(relabeled), out_path)
    _emit(f"cocycle {str(valid).lower()}")
    _emit(f"output {out_path}")
    _emit(f"result {'pass' if valid else 'fail'}")
    _note(f"extension written to {out_path}; the pair is "
          + ("a 2-cocycle" if valid else "NOT a 2-cocycle (output fails check)"))
    return 0 if valid else 1


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compleib",
        description="Exact checks and cohomology for compatible Leibniz algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify all algebra and representation axioms")
    p.add_argument("file")

    p = sub.add_parser("cohomology", help="cohomology dimensions at one level")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True, help="cochain level (n >= 1)")
    p.add_argument("--coefficients", default="self",
                   help="'self' or the name of a representation in the file")
    p.add_argument("--cap", type=int, default=coh.DEFAULT_CAP,
                   help="abort if a matrix would exceed this many entries")

    p = sub.add_parser("deform", help="check the six infinitesimal-deformation conditions")
    p.add_argument("file")
    p.add_argument("mu1", help="name of the binary self cochain deforming bracket1")
    p.add_argument("m1", help="name of the binary self cochain deforming bracket2")
    p.add_argument("operator", nargs="?", default=None,
                   help="optional linear operator to test triviality against")

    p = sub.add_parser("nijenhuis", help="check both Nijenhuis torsions of an operator")
    p.add_argument("file")
    p.add_argument("operator", help="name of the arity-1 self cochain")

    p = sub.add_parser("extend", help="build an abelian extension from a cocycle pair")
    p.add_argument("file")
    p.add_argument("rep", help="name of the representation carrying the fiber")
    p.add_argument("theta1", help="binary cochain valued in the fiber (bracket1 part)")
    p.add_argument("theta2", help="binary cochain valued in the fiber (bracket2 part)")
    p.add_argument("out", help="path for the resulting algebra file")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        model = parse_algebra_file(args.file)
        if args.command == "check":
            return cmd_check(model)
        if args.command == "cohomology":
            if args.n < 1:
                raise FileFormatError("--n must be at least 1")
            return cmd_cohomology(model, args.n, args.coefficients, args.cap)
        if args.command == "deform":
            return cmd_deform(model, args.mu1, args.m1, args.operator)
        if args.command == "nijenhuis":
            return cmd_nijenhuis(model, args.operator)
        if args.command == "extend":
            return cmd_extend(model, args.rep, args.theta1, args.theta2, args.out)
        raise AssertionError(f"unhandled command {args.command}")
    except FileFormatError as exc:
        _note(f"error: {exc}")
        return 2
    except coh.SizeCapExceeded as exc:
        _note(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
