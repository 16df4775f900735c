"""Command line interface: ``amalgam compute|groebner|verify|young``.

Exit status 0 on success, 1 for input errors (unreadable file, syntax,
ill-defined maps, unsupported algebras), 2 when a certificate fails or a
resource limit is hit.  Every error prints a single ``error: ...`` line on
standard error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Dict, List, Optional, Sequence

from . import groebner as gbmod
from .algebra import AlgebraHom, ArtinianAlgebra, make_hom
from .errors import AmalgamError, ComputationError, InputError, NotMonomial
from .groebner import Ideal, ideal_intersection
from .polyring import Field, PolyRing
from .problem import ProblemFile, parse_problem_file
from .pushout import (
    AmalgamResult,
    amalgamate,
    build_joint_representation,
    representation_independence_check,
    universal_factorization,
    verify_lemma1,
)
from .young import YoungDiagram, render_young, young_amalgam_oracle

CERTIFICATE_ORDER = (
    "proposition1",
    "commuting_square",
    "length_identity",
    "easy_case_agreement",
    "pullback_match",
)
EXTRA_CHECKS = ("lemma1", "representation_independence", "universality")


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _polys(ps) -> List[str]:
    return [str(p) for p in ps]


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        reason = exc.strerror if isinstance(exc, OSError) and exc.strerror else str(exc)
        raise InputError(f"cannot open {path}: {reason}") from None


def _load(path: str) -> ProblemFile:
    return parse_problem_file(_read(path))


# -- serialisation -----------------------------------------------------------


def algebra_json(A: ArtinianAlgebra) -> Dict:
    return {"ring": list(A.ring.variables), "ideal": _polys(A.ideal.groebner().elements)}


def hom_json(h: AlgebraHom, source: str, target: str) -> Dict:
    return {"source": source, "target": target,
            "images": {v: str(p) for v, p in zip(h.source_ring.variables, h.images)}}


def result_json(res: AmalgamResult) -> Dict:
    f1, f2 = res.f1, res.f2
    names = {"A1": f1.source, "A2": f2.source, "A0": f1.target}
    tr = res.trace
    return {
        "field": str(res.A.field),
        "ring": list(res.A.ring.variables),
        "amalgam_ideal": _polys(res.ideal.groebner().elements),
        "length": res.length,
        "lengths": {k: A.length for k, A in names.items()},
        "certificates": {k: res.certificates[k] for k in CERTIFICATE_ORDER
                         if k in res.certificates},
        "trace": {
            "d_paper": tr.d_paper,
            "d_used": tr.d_used,
            "M": tr.M_strings(),
            "rank_L": tr.rank_L,
        },
        "projections": {
            "to_a1": {v: str(p) for v, p in zip(res.A.ring.variables, res.to_a1.images)},
            "to_a2": {v: str(p) for v, p in zip(res.A.ring.variables, res.to_a2.images)},
        },
        "inputs": {
            "algebras": {k: algebra_json(A) for k, A in names.items()},
            "homs": {"f1": hom_json(f1, "A1", "A0"), "f2": hom_json(f2, "A2", "A0")},
        },
    }


def homs_from_json(data: Dict):
    """Rebuild ``(f1, f2)`` from the ``inputs`` block of :func:`result_json`."""
    try:
        F = Field.parse(data["field"])
        inputs = data["inputs"]
        algs = {}
        for name, spec in inputs["algebras"].items():
            ring = PolyRing(tuple(spec["ring"]), F)
            algs[name] = ArtinianAlgebra(ring, Ideal(ring, [ring.parse(p) for p in spec["ideal"]]),
                                         name)
        homs = []
        for key in ("f1", "f2"):
            spec = inputs["homs"][key]
            src, tgt = algs[spec["source"]], algs[spec["target"]]
            images = [spec["images"][v] for v in src.ring.variables]
            homs.append(make_hom(src, tgt, images, key))
        return homs[0], homs[1]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed result file: missing or bad field {exc}") from None


# -- text output -------------------------------------------------------------


def _status(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def amalgam_text(res: AmalgamResult, young: bool = False) -> str:
    tr = res.trace
    A = res.A
    f1, f2 = res.f1, res.f2
    lines = [
        f"field: {A.field}",
        f"ring: {', '.join(A.ring.variables)}",
        f"ideal: {', '.join(_polys(res.ideal.groebner().elements))}",
        f"length: {res.length}",
        f"lengths: A1 = {f1.source.length}, A2 = {f2.source.length}, A0 = {f1.target.length}",
        f"M: {', '.join(tr.M_strings())}",
        f"rank L: {tr.rank_L}",
        f"d: {tr.d_used} (minimal-basis degree {tr.d_paper})",
        "to A1: " + ", ".join(f"{v} -> {p}" for v, p in zip(A.ring.variables, res.to_a1.images)),
        "to A2: " + ", ".join(f"{v} -> {p}" for v, p in zip(A.ring.variables, res.to_a2.images)),
    ]
    for k in CERTIFICATE_ORDER:
        if k in res.certificates:
            lines.append(f"certificate {k}: {_status(res.certificates[k])}")
    if young:
        Y = YoungDiagram(frozenset(A.basis), A.ring.nvars)
        lines.append("staircase:")
        lines.append(render_young(Y))
    return "\n".join(lines)


def groebner_text(pf: ProblemFile, names: Optional[Sequence[str]] = None) -> str:
    lines = []
    if names is None:
        items = [(n, I) for n, I in pf.ideals.items()]
        items += [(n, A.ideal) for n, A in pf.algebras.items()]
    else:
        items = [(n, pf.ideals[n]) for n in names]
    for name, I in items:
        gb = I.groebner()
        lines.append(f"{name}: {', '.join(_polys(gb.elements))}")
        if gb.is_zero_dimensional():
            lines.append(f"  length: {len(gb.standard_monomials())}")
    return "\n".join(lines)


def young_text(I1: Ideal, I2: Ideal) -> str:
    ideal, Y = young_amalgam_oracle(I1, I2)
    Y1, Y2 = YoungDiagram.of_ideal(I1), YoungDiagram.of_ideal(I2)
    Y0 = Y1.intersection(Y2)
    lines = []
    for label, D in (("Y1", Y1), ("Y2", Y2), ("Y0 = Y1 & Y2", Y0), ("Y = Y1 | Y2", Y)):
        lines.append(f"{label} ({len(D)} cell{'' if len(D) == 1 else 's'}):")
        lines.append(render_young(D))
    lines.append(f"ideal: {', '.join(_polys(ideal.groebner().elements))}")
    lines.append(f"length: {len(Y)} = {len(Y1)} + {len(Y2)} - {len(Y0)}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------


def _apply_limits(args):
    gbmod.set_limits(max_basis=getattr(args, "max_basis", None),
                     max_degree=getattr(args, "max_degree", None))


def cmd_compute(args, out) -> int:
    pf = _load(args.file)
    task = pf.task or "amalgam"
    if task == "groebner":
        print(groebner_text(pf, pf.task_args), file=out)
        return 0
    if task == "intersect":
        I, J = pf.ideal_pair()
        K = ideal_intersection(I, J)
        gb = K.groebner()
        if args.format == "json":
            print(json.dumps({"field": str(pf.field), "ring": list(K.ring.variables),
                              "intersection": _polys(gb.elements),
                              "length": len(gb.standard_monomials())}, indent=2), file=out)
        else:
            print(f"ideal: {', '.join(_polys(gb.elements))}", file=out)
            print(f"length: {len(gb.standard_monomials())}", file=out)
        return 0
    if task == "young":
        print(young_text(*pf.ideal_pair()), file=out)
        return 0
    f1, f2 = pf.hom_pair()
    res = amalgamate(f1, f2, certify=not args.no_certificates)
    if args.format == "json":
        print(json.dumps(result_json(res), indent=2), file=out)
    else:
        print(amalgam_text(res, young=args.young), file=out)
    return 0


def cmd_groebner(args, out) -> int:
    pf = _load(args.file)
    names = pf.task_args if pf.task == "groebner" else None
    print(groebner_text(pf, names), file=out)
    return 0


def cmd_young(args, out) -> int:
    pf = _load(args.file)
    I1, I2 = pf.ideal_pair()
    if not (I1.is_monomial() and I2.is_monomial()):
        raise NotMonomial("young needs two monomial ideals")
    print(young_text(I1, I2), file=out)
    return 0


def _trial(f1, f2, rng: random.Random, swap: bool, redundant: int):
    """All certificates for one pair, under one choice of presentation."""
    res = amalgamate(f1, f2, swap=swap, redundant=redundant, strict=False)
    checks = {k: res.certificates.get(k, False) for k in CERTIFICATE_ORDER}
    checks["lemma1"] = verify_lemma1(res.joint)
    sd = res.surjective
    other = build_joint_representation(sd.f1p, sd.f2p, swap=not swap, redundant=1 - redundant)
    checks["representation_independence"] = representation_independence_check(
        sd.f1p, sd.f2p, res.joint, other)
    from .instances import random_test_pair

    chi1, chi2 = random_test_pair(rng, f1, f2, generators=rng.randint(1, 2))
    try:
        universal_factorization(res, chi1, chi2)
        checks["universality"] = True
    except ComputationError:
        checks["universality"] = False
    return checks, res


def _report(counts: Dict[str, int], trials: int, results: List[Dict], args, out) -> bool:
    keys = CERTIFICATE_ORDER + EXTRA_CHECKS
    ok = all(counts.get(k, 0) == trials for k in keys)
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"trials": trials, "counts": {k: counts.get(k, 0) for k in keys},
                          "results": results}, indent=2), file=out)
        return ok
    print(f"trials: {trials}", file=out)
    for k in keys:
        print(f"{k}: {counts.get(k, 0)}/{trials}", file=out)
    return ok


def _tally(counts: Dict[str, int], results: List[Dict], checks: Dict[str, bool], res, args):
    for k, v in checks.items():
        counts[k] = counts.get(k, 0) + int(v)
    if getattr(args, "format", "text") == "json":
        results.append(result_json(res))


def cmd_verify(args, out) -> int:
    counts: Dict[str, int] = {}
    results: List[Dict] = []
    if args.random:
        if args.file:
            raise UsageError("give either FILE or --random, not both")
        from .instances import random_mixed_instance

        F = Field.parse(args.field)
        for t in range(args.trials):
            rng = random.Random(f"{args.seed}:{t}")
            inst = random_mixed_instance(rng, F, max_vars=args.vars, max_length=args.max_length)
            checks, res = _trial(inst.f1, inst.f2, rng, rng.random() < 0.5, rng.randint(0, 1))
            _tally(counts, results, checks, res, args)
        return 0 if _report(counts, args.trials, results, args, out) else 2
    if not args.file:
        raise UsageError("verify needs FILE or --random")
    text = _read(args.file)
    if text.lstrip().startswith("{"):
        return _verify_json(text, out)
    pf = parse_problem_file(text)
    f1, f2 = pf.hom_pair()
    for t in range(args.trials):
        rng = random.Random(f"{args.seed}:{t}")
        swap, redundant = (False, 0) if t == 0 else (rng.random() < 0.5, rng.randint(0, 1))
        checks, res = _trial(f1, f2, rng, swap, redundant)
        _tally(counts, results, checks, res, args)
    return 0 if _report(counts, args.trials, results, args, out) else 2


def _verify_json(text: str, out) -> int:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed result file: {exc}") from None
    f1, f2 = homs_from_json(data)
    res = amalgamate(f1, f2, strict=False)
    fresh = result_json(res)
    recorded = data.get("certificates", {})
    ok = True
    for k in CERTIFICATE_ORDER:
        if k in recorded or k in fresh["certificates"]:
            same = recorded.get(k) == fresh["certificates"].get(k)
            ok &= same and bool(fresh["certificates"].get(k))
            print(f"{k}: {_status(bool(fresh['certificates'].get(k)))}"
                  f"{'' if same else ' (recorded value differs)'}", file=out)
    for key in ("amalgam_ideal", "length", "trace"):
        same = data.get(key) == fresh[key]
        ok &= same
        print(f"{key}: {'match' if same else 'MISMATCH'}", file=out)
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="amalgam", description="Amalgams of zero-dimensional schemes over exact fields.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="run the task of a problem file")
    c.add_argument("file")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--young", action="store_true", help="draw the amalgam's staircase")
    c.add_argument("--no-certificates", action="store_true")
    c.add_argument("--max-degree", type=int)
    c.add_argument("--max-basis", type=int)
    c.set_defaults(func=cmd_compute)

    g = sub.add_parser("groebner", help="reduced Groebner bases of the declared ideals")
    g.add_argument("file")
    g.add_argument("--max-degree", type=int)
    g.add_argument("--max-basis", type=int)
    g.set_defaults(func=cmd_groebner)

    v = sub.add_parser("verify", help="count passing certificates")
    v.add_argument("file", nargs="?")
    v.add_argument("--random", action="store_true")
    v.add_argument("--trials", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--field", default="GF(7)")
    v.add_argument("--vars", type=int, default=3)
    v.add_argument("--max-length", type=int, default=10)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--max-degree", type=int)
    v.add_argument("--max-basis", type=int)
    v.set_defaults(func=cmd_verify)

    y = sub.add_parser("young", help="Young diagrams of two monomial ideals")
    y.add_argument("file")
    y.set_defaults(func=cmd_young)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    saved = (gbmod.LIMITS.max_basis, gbmod.LIMITS.max_degree)
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "trials", 1) < 0:
            raise UsageError("--trials must be non-negative")
        _apply_limits(args)
        return args.func(args, out)
    except ComputationError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (InputError, AmalgamError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    finally:
        gbmod.set_limits(*saved)


def run_command(argv: Sequence[str]) -> int:
    return main(list(argv))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
