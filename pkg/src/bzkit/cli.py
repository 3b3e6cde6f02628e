"""Command line interface: ``bzkit <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 semantic validation error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import bz_affine as bza
from . import lusztig_affine as la
from . import maya as my
from .bz_finite import BZFinite
from .graphs import affine_closure, finite_closure, to_dot
from .graphs import to_json as graph_json
from .lusztig_affine import LusztigAffine
from .lusztig_finite import LusztigFinite
from .root_data import Interval
from .tableau_phi import NotInImage, phi, phi_component, phi_inverse, phi_prime, phi_prime_component
from .verify import SUITES, RunConfig, run_suites


class ParseError(Exception):
    pass


class SemanticError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc})") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def _build(cls, obj, what: str):
    try:
        return cls.from_json(obj)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"{what}: missing or mistyped field ({exc})") from exc
    except ValueError as exc:
        raise SemanticError(f"{what}: {exc}") from exc


_FINITE = re.compile(r"^\s*I\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*;\s*\{([^}]*)\}\s*$")
_CHARGED = re.compile(r"^\s*r\s*=\s*(-?\d+)\s*;\s*lambda\s*=\s*([\d,\s]*?)\s*(;\s*(particle|hole))?\s*$")


def parse_finite_maya(text: str) -> my.MayaFinite:
    m = _FINITE.match(text)
    if not m:
        raise ParseError(f"cannot parse Maya diagram {text!r}; expected 'I=lo..hi;{{...}}'")
    body = [x for x in m.group(3).replace(" ", "").split(",") if x]
    try:
        members = tuple(int(x) for x in body)
    except ValueError as exc:
        raise ParseError(f"diagram members must be integers in {text!r}") from exc
    try:
        return my.MayaFinite(Interval(int(m.group(1)), int(m.group(2))), members)
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse partition {text!r}") from exc


def parse_charged_maya(text: str) -> my.MayaCharged:
    m = _CHARGED.match(text)
    if not m:
        raise ParseError(f"cannot parse Maya diagram {text!r}; expected 'r=..;lambda=..'")
    try:
        return my.MayaCharged(int(m.group(1)), parse_partition(m.group(2)), m.group(4) or my.PARTICLE)
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc


def _emit(obj, fmt: str = "json"):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(obj)


def _finite_components(a: LusztigFinite, args, component_fn, full_fn):
    if args.all:
        M = full_fn(a)
        if args.format == "json":
            _emit(M.to_json())
        else:
            for k, v in M.components().items():
                print(f"{{{','.join(map(str, k))}}}: {v}")
        return 0
    if not args.k:
        raise ParseError("give --k DIAGRAM or --all")
    for text in args.k:
        k = parse_finite_maya(text)
        if k.interval != a.interval:
            raise SemanticError(f"diagram {text} is not over {a.interval}")
        print(component_fn(a, k))
    return 0


def cmd_phi(args):
    a = _build(LusztigFinite, _load_json(args.a), args.a)
    return _finite_components(a, args, phi_component, phi)


def cmd_phi_prime(args):
    a = _build(LusztigFinite, _load_json(args.a), args.a)
    return _finite_components(a, args, phi_prime_component, phi_prime)


def cmd_phi_inverse(args):
    M = _build(BZFinite, _load_json(args.m), args.m)
    try:
        a = phi_inverse(M, args.normalization)
    except NotInImage as exc:
        raise SemanticError(str(exc)) from exc
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    _emit(a.to_json() if args.format == "json" else str(a), args.format)
    return 0


def _load_generator(args) -> LusztigAffine:
    if args.a:
        return _build(LusztigAffine, _load_json(args.a), args.a)
    if args.segments is None:
        raise ParseError("give --a FILE or --segments TEXT")
    try:
        return la.parse_segment_text(args.segments, args.l)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _parse_window(text: str) -> tuple:
    try:
        r, b = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"window must be 'CHARGE,BOXES', got {text!r}") from exc
    if r < 0 or b < 0:
        raise SemanticError("window bounds must be nonnegative")
    return r, b


def cmd_phi_z(args):
    gen = _load_generator(args)
    if not la.is_aperiodic(gen) and not args.allow_periodic:
        raise SemanticError("generator is not aperiodic (use --allow-periodic to evaluate anyway)")
    view = bza.BZAffineView(gen)
    ks = [parse_charged_maya(t) for t in args.k] if args.k else my.maya_window(*_parse_window(args.window))
    comps = []
    for k in ks:
        if k.side == my.HOLE:
            val = view.phi_prime_component(k) if args.dual else view.star_component(k)
        else:
            val = view.theta_component(k) if args.theta else view.component(k)
        comps.append({"maya": k.to_json(), "M": val})
    if args.format == "json":
        _emit({"generator": gen.to_json(), "components": comps})
    else:
        for c in comps:
            print(f"{my.MayaCharged.from_json(c['maya'])}: {c['M']}")
    return 0


def cmd_graph(args):
    if args.depth < 0:
        raise SemanticError("depth must be nonnegative")
    if args.kind == "finite":
        if args.lo is None or args.hi is None:
            raise ParseError("finite graphs need --lo and --hi")
        try:
            interval = Interval(args.lo, args.hi)
        except ValueError as exc:
            raise SemanticError(str(exc)) from exc
        g = finite_closure(interval, args.depth)
    else:
        if args.l < 3:
            raise SemanticError("l must be at least 3")
        g = affine_closure(args.l, args.depth)
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
    else:
        _emit(graph_json(g))
    return 0


def cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if args.suite == "all":
        names.remove("corrupted-fixture")
    try:
        cfg = RunConfig(
            seed=args.seed,
            samples=args.samples,
            depth=args.depth,
            l=args.l,
            window=_parse_window(args.window),
            fingerprint=args.fingerprint,
            generators=args.generators,
            bz_window=tuple(int(x) for x in args.bz_window.split(",")),
        )
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    results = run_suites(names, cfg)
    report = {"ok": all(r.ok for r in results), "suites": [r.to_json() for r in results]}
    _emit(report)
    return 0 if report["ok"] else 1


def cmd_maya(args):
    shape = parse_partition(args.partition)
    try:
        k = my.MayaCharged(args.charge, shape)
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    if args.action == "young":
        if args.format == "json":
            _emit({"maya": k.to_json(), "members_from": k.floor + 1, "particles": sorted(k.particles())})
        else:
            print(f"{k}: Z_<={k.floor} + {{{','.join(map(str, sorted(k.particles())))}}}")
    elif args.action == "core":
        if args.l is None:
            raise ParseError("core needs --l")
        print("true" if my.is_l_core(k, args.l) else "false")
    elif args.action == "quotient":
        if args.l is None:
            raise ParseError("quotient needs --l")
        if args.l < 3:
            raise SemanticError("l must be at least 3")
        comps = my.l_quotient(k, args.l)
        if args.format == "json":
            _emit([c.to_json() for c in comps])
        else:
            print(",".join(str(c.charge) for c in comps))
    return 0


def cmd_segments(args):
    if args.json:
        gen = _build(LusztigAffine, _load_json(args.json), args.json)
    else:
        gen = _load_generator(args)
    if args.format == "json":
        a0, z = la.strip_z(gen)
        _emit(
            {
                "generator": gen.to_json(),
                "text": la.to_segment_text(gen),
                "aperiodic": la.is_aperiodic(gen),
                "z": list(z),
                "aperiodic_part": la.to_segment_text(a0),
                "weight": la.weight_affine(gen).to_json(),
            }
        )
    else:
        print(la.to_segment_text(gen))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bzkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("phi", cmd_phi, "components of the e-normalized tropical map"),
        ("phi-prime", cmd_phi_prime, "components of the w0-normalized dual map"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--a", required=True, help="finite Lusztig datum (JSON file)")
        s.add_argument("--k", action="append", help="diagram such as 'I=1..2;{1,3}' (repeatable)")
        s.add_argument("--all", action="store_true", help="print every component")
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.set_defaults(func=fn)

    s = sub.add_parser("phi-inverse", help="recover the Lusztig datum of a finite BZ datum")
    s.add_argument("--m", required=True, help="BZ datum (JSON file)")
    s.add_argument("--normalization", choices=("e", "w0"), default="e")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_phi_inverse)

    s = sub.add_parser("phi-z", help="components of the affine tropical map")
    s.add_argument("--a", help="affine Lusztig datum (JSON file)")
    s.add_argument("--segments", help="multisegment text such as '(0;2)^3 (1;1)'")
    s.add_argument("--l", type=int, default=3)
    s.add_argument("--k", action="append", help="diagram such as 'r=1;lambda=1' or 'r=0;lambda=;hole'")
    s.add_argument("--window", default="2,6", help="CHARGE,BOXES window when --k is absent")
    s.add_argument("--theta", action="store_true", help="evaluate reflected components instead")
    s.add_argument("--dual", action="store_true", help="hole-side diagrams use the dual map")
    s.add_argument("--allow-periodic", action="store_true")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_phi_z)

    s = sub.add_parser("graph", help="crystal graph generated by the starred lowering operators")
    s.add_argument("--kind", choices=("finite", "affine"), required=True)
    s.add_argument("--lo", type=int)
    s.add_argument("--hi", type=int)
    s.add_argument("--l", type=int, default=3)
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--l", type=int, default=3)
    s.add_argument("--generators", type=int, default=20)
    s.add_argument("--window", default="2,6", help="fingerprint window CHARGE,BOXES")
    s.add_argument("--bz-window", default="-6,6", help="interval LO,HI for e-bz validation")
    s.add_argument("--fingerprint", choices=("components", "theta"), default="components")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("maya", help="Maya diagram conversions")
    s.add_argument("action", choices=("young", "core", "quotient"))
    s.add_argument("--charge", type=int, default=0)
    s.add_argument("--partition", default="")
    s.add_argument("--l", type=int)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_maya)

    s = sub.add_parser("segments", help="convert between multisegment text and JSON")
    s.add_argument("--json", help="affine Lusztig datum (JSON file)")
    s.add_argument("--segments", help="multisegment text")
    s.add_argument("--a", help=argparse.SUPPRESS)
    s.add_argument("--l", type=int, default=3)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_segments)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SemanticError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
