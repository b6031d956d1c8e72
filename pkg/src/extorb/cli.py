"""Command-line front end: ``extorb <verb> [options]``.

Exit codes: 0 success, 1 a reproduce mismatch, 2 bad input, 3 a computation
over the configured cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import catalog, fp, reproduce
from .classes import ExtensionClass, parse_class
from .errors import CapExceeded, ExtorbError, InputError
from .expr import parse_form
from .forms import CONVENTIONS, classify, equivalent, reduce_to_standard, standard_label
from .fp import FpMatrix
from .orbits import Config, im_rho_order, joint_stabilizer, omega, stabilizer_n, stabilizer_v
from .twisting import TwistingMap, c_chi
from .wells import aut_order, semisimple_report

TWISTINGS = {
    "maximal-class-p5": lambda: catalog.maximal_class_twisting(5),
    "u4-frattini": catalog.u4_twisting,
}


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _config(args) -> Config:
    cfg = Config(workers=args.workers, convention=args.convention)
    if args.cap is not None:
        cfg = Config(cap=args.cap, workers=args.workers, convention=args.convention)
    return cfg


def _read_class(args) -> ExtensionClass:
    if args.entry:
        return catalog.get(args.entry).cls
    if args.cls is None:
        raise InputError("give --class (or --entry NAME)")
    if args.m is None:
        raise InputError("--m is required with --class")
    return parse_class(args.cls, args.p, args.m, args.n)


def _matrix(m: FpMatrix) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in m.row(i)) for i in range(m.rows)) + "]"


def _need_m(args):
    if args.m is None:
        raise InputError("--m is required")


# -- verbs -------------------------------------------------------------------------------

def cmd_classify(args):
    _need_m(args)
    q = parse_form(args.form[0], args.m)
    t = classify(q)
    label = standard_label(q) if not q.is_zero() else "zero form"
    _emit(args, {"form": str(q), "triple": list(t.as_tuple()), "label": label},
          [f"form:   {q}", f"triple: {t.as_tuple()}", f"label:  {label}"])
    return 0


def cmd_reduce(args):
    _need_m(args)
    q = parse_form(args.form[0], args.m)
    s, std = reduce_to_standard(q, args.convention)
    _emit(args, {"form": str(q), "s": s.to_json(), "standard": str(std)},
          [f"form:     {q}", f"s:        {_matrix(s)}", f"standard: {std}"])
    return 0


def cmd_equiv(args):
    _need_m(args)
    if len(args.form) != 2:
        raise InputError("equiv needs exactly two --form arguments")
    q1, q2 = (parse_form(f, args.m) for f in args.form)
    if args.witness:
        ok, s = equivalent(q1, q2, witness=True, convention=args.convention)
    else:
        ok, s = equivalent(q1, q2), None
    lines = [f"{q1}  ~  {q2}: {ok}"]
    if s is not None:
        lines.append(f"witness s: {_matrix(s)}")
    _emit(args, {"equivalent": ok, "witness": s.to_json() if s is not None else None}, lines)
    return 0


def cmd_stab(args):
    e = _read_class(args)
    cfg = _config(args)
    fn = {"V": stabilizer_v, "N": stabilizer_n, "joint": joint_stabilizer}[args.side]
    rep = fn(e, config=cfg)
    label = None
    if rep.elements is not None and rep.order <= 10**4:
        label = rep.identify().label
    payload = {"side": rep.side, "order": str(rep.order), "label": label, "method": rep.method}
    _emit(args, payload, [f"class: {e}", f"side:  {rep.side}", f"order: {rep.order}", f"label: {label}"])
    return 0


def cmd_omega(args):
    e = _read_class(args)
    om = omega(e, config=_config(args))
    label = om.identify().label if om.mult_table is not None else None
    lines = [f"class: {e}", f"|Omega| = {om.order}  ({label})"]
    for i, (el, a) in enumerate(zip(om.elements, om.reps_left)):
        lines.append(f"  [{i}] {el}    via s = {_matrix(a)}")
    if om.mult_table is not None and om.order <= 32:
        lines.append("table:")
        lines += ["  " + " ".join(str(x) for x in row) for row in om.mult_table]
    payload = om.to_json()
    payload["label"] = label
    _emit(args, payload, lines)
    return 0


def cmd_imrho(args):
    e = _read_class(args)
    r = im_rho_order(e, config=_config(args))
    lines = [f"class: {e}",
             f"|Im(rho)| = {r.stab_v} * {r.stab_n} * {r.omega} = {r.order}",
             f"Omega: {r.omega_label}"]
    if args.timing:
        lines.append(f"elapsed: {r.elapsed_ms:.1f} ms")
    _emit(args, r.to_json(timing=args.timing), lines)
    return 0


def cmd_autorder(args):
    e = _read_class(args)
    cfg = _config(args)
    rep = aut_order(e, n_characteristic=args.characteristic, config=cfg)
    ss = semisimple_report(e, config=cfg)
    lines = [f"class: {e}",
             f"|Hom(V,N)| = {rep.hom_order}",
             f"|Im(rho)|  = {rep.stab_v_order} * {rep.stab_n_order} * {rep.omega_order} = {rep.im_rho_order}",
             f"{rep.what} = {rep.aut_order} = {rep.to_json()['aut_order_factored']}"]
    if not args.characteristic:
        lines.append("(pass --characteristic if N is characteristic in G to read this as |Aut(G)|)")
    lines += ss.lines()
    payload = rep.to_json()
    payload["semisimple"] = ss.to_json()
    _emit(args, payload, lines)
    return 0


def cmd_cchi(args):
    if args.twisting:
        if args.twisting not in TWISTINGS:
            raise InputError(f"unknown twisting {args.twisting!r}; known: {', '.join(TWISTINGS)}")
        chi = TWISTINGS[args.twisting]()
    elif args.images:
        try:
            imgs = json.loads(args.images)
        except json.JSONDecodeError as exc:
            raise InputError(f"--images is not valid JSON: {exc}") from None
        if args.m is None or args.n is None:
            raise InputError("--images needs --m and --n")
        chi = TwistingMap(args.p, args.m, args.n, tuple(FpMatrix.from_rows(g, args.p) for g in imgs))
    else:
        raise InputError("give --twisting NAME or --images JSON")
    rep = c_chi(chi, config=_config(args))
    _emit(args, {"order": str(rep.order), "twisting": chi.to_json()},
          [f"twisting kernel: {chi.kernel().basis}", f"|C_chi| = {rep.order}"])
    return 0


def cmd_catalog(args):
    if args.action == "list":
        names = catalog.names()
        _emit(args, {"entries": names}, names)
        return 0
    if not args.name:
        raise InputError("catalog get needs an entry name")
    entry = catalog.get(args.name)
    lines = [f"name:     {entry.name}", f"class:    {entry.cls}", f"(p,m,n):  ({entry.cls.p}, {entry.cls.m}, {entry.cls.n})",
             f"source:   {entry.source}"]
    lines += [f"expected: {k} = {v}" for k, v in entry.expected.items()]
    _emit(args, entry.to_json(), lines)
    return 0


def cmd_reproduce(args):
    cfg = _config(args)
    t0 = time.perf_counter()
    checks = reproduce.run(args.target, cfg, slow=args.slow)
    passed = sum(c.ok for c in checks)
    lines = []
    if args.target == "pair-table":
        cols = reproduce.pair_table_rows(cfg)
        lines += _three_columns(cols)
        lines.append("")
    lines += [c.line() for c in checks]
    if args.target == "pair-table":
        rows_ok = sum(1 for e in catalog.pair_table()
                      if all(c.ok for c in checks if c.name.startswith(e.name + " ")))
        lines.append(f"{rows_ok}/{len(catalog.pair_table())} match")
    lines.append(f"{passed}/{len(checks)} checks pass")
    if args.timing:
        lines.append(f"elapsed: {(time.perf_counter() - t0) * 1000:.0f} ms")
    _emit(args, {"target": args.target, "checks": [c.to_json() for c in checks], "passed": passed,
                 "total": len(checks)}, lines)
    return 0 if passed == len(checks) else 1


def _three_columns(cols: dict[int, list[tuple[str, int]]]) -> list[str]:
    keys = sorted(cols)
    width = 2 + max(len(f"{y} ({v})") for rows in cols.values() for y, v in rows)
    out = ["".join(f"|Im(rho)| = {k}".ljust(width) for k in keys).rstrip()]
    depth = max(len(cols[k]) for k in keys)
    for i in range(depth):
        cells = []
        for k in keys:
            cells.append((f"{cols[k][i][0]} ({cols[k][i][1]})" if i < len(cols[k]) else "").ljust(width))
        out.append("".join(cells).rstrip())
    return out


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="prime (default 2)")
    common.add_argument("--m", type=int, help="rank of V")
    common.add_argument("--n", type=int, default=1, help="rank of N (default 1)")
    common.add_argument("--class", dest="cls", help="components separated by ';', e.g. 'xy; yz'")
    common.add_argument("--form", action="append", default=[], help="a quadratic form over F_2")
    common.add_argument("--entry", help="use a catalog entry instead of --class")
    common.add_argument("--cap", type=lambda s: int(float(s)), help="enumeration cap (default 3e7 or $EXTORB_CAP)")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1, help="worker processes")
    common.add_argument("--convention", choices=CONVENTIONS, default="inverse",
                        help="GL_m action on forms: q(s^-1 v) or q(s^T v)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="report elapsed time")
    common.add_argument("--witness", action="store_true", help="equiv: also search for s with s.q1 = q2")

    parser = argparse.ArgumentParser(prog="extorb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("classify", parents=[common], help="(dim, dim bilrad, Arf) of a form").set_defaults(fn=cmd_classify)
    sub.add_parser("reduce", parents=[common], help="reduce a form to a standard one").set_defaults(fn=cmd_reduce)
    sub.add_parser("equiv", parents=[common], help="equivalence of two forms").set_defaults(fn=cmd_equiv)
    sp = sub.add_parser("stab", parents=[common], help="stabilizer of a class")
    sp.add_argument("--side", choices=("V", "N", "joint"), default="V")
    sp.set_defaults(fn=cmd_stab)
    sub.add_parser("omega", parents=[common], help="intersection orbit group").set_defaults(fn=cmd_omega)
    sub.add_parser("imrho", parents=[common], help="|Im(rho)| with breakdown").set_defaults(fn=cmd_imrho)
    sp = sub.add_parser("autorder", parents=[common], help="|Aut_N(G)| ledger")
    sp.add_argument("--characteristic", action="store_true", help="assert N is characteristic in G")
    sp.set_defaults(fn=cmd_autorder)
    sp = sub.add_parser("cchi", parents=[common], help="pairs preserving a twisting")
    sp.add_argument("--twisting", help=f"named twisting: {', '.join(TWISTINGS)}")
    sp.add_argument("--images", help="JSON list of n x n row lists, one per basis vector of Q")
    sp.set_defaults(fn=cmd_cchi)
    sp = sub.add_parser("catalog", parents=[common], help="named classes")
    sp.add_argument("action", choices=("list", "get"))
    sp.add_argument("name", nargs="?")
    sp.set_defaults(fn=cmd_catalog)
    sp = sub.add_parser("reproduce", parents=[common], help="run golden checks")
    sp.add_argument("target", choices=tuple(reproduce.TARGETS) + ("all",))
    sp.add_argument("--slow", action="store_true", help="include the GL_4(F_3) sweep")
    sp.set_defaults(fn=cmd_reproduce)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.workers < 1:
            raise InputError("--workers must be >= 1")
        if args.cap is not None and args.cap < 0:
            raise InputError("--cap must be non-negative")
        fp.check_prime(args.p)
        return args.fn(args)
    except CapExceeded as exc:
        print(f"extorb: {exc}", file=sys.stderr)
        return 3
    except (InputError, ValueError) as exc:
        print(f"extorb: {exc}", file=sys.stderr)
        return 2
    except ExtorbError as exc:
        print(f"extorb: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
