"""Command-line harness: ``tgflab <tgf|formula|verify|reciprocity|kuo|render>``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or parameters.
Output is deterministic; sweep timings are only printed with ``--timings``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Iterable

from . import formulas, kuo
from .matchgen import dual_graph, tgf, tiling_count, weighted_count_at_one
from .qlaurent import InexactDivision, LaurentQ
from .regions import FAMILIES, InvalidParameters, Region, RegionSpec, build_region, parse_family
from .weights import WeightScheme

OK, FAILED, USAGE = 0, 1, 2

# named sweep groups for ``verify --family``
_GROUPS = {
    "quartered": ("R1", "R2", "R3", "R4"),
    "halved": ("P", "Pprime"),
    "onesided": ("A", "B", "C", "D"),
    "twosided": ("S", "T"),
}
_GROUPS["all"] = sum(_GROUPS.values(), ())


def threads() -> int:
    raw = os.environ.get("TGFLAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _int_list(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() in ("", "-"):
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise InvalidParameters(f"expected a comma-separated list of integers, got {text!r}") from None


def _spec_from_args(args) -> RegionSpec:
    if not args.family:
        raise InvalidParameters("--family is required")
    fam = parse_family(args.family)
    params = {}
    for name in ("x", "n", "d", "u"):
        value = getattr(args, name)
        if value is not None:
            params[name] = int(value)
    for name in ("s", "l", "h"):
        params[name] = _int_list(getattr(args, name))
    if fam.startswith("R") or fam in ("C", "D", "S", "T"):
        params.pop("n", None)
    return RegionSpec(family=fam, **params).validate()


def _built(spec: RegionSpec, scheme: str | None) -> Region:
    r = build_region(spec)
    if scheme:
        r = r.with_scheme(WeightScheme.parse(scheme))
    return r


def _poly_out(value: LaurentQ, fmt: str) -> str:
    return json.dumps(value.to_json()) if fmt == "json" else str(value)


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=False) + "\n")
        return
    if not rows:
        if fmt == "csv":
            out.write("\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    for row in rows:
        out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")


# -- tgf / formula ---------------------------------------------------------------

def cmd_tgf(args, out) -> int:
    spec = _spec_from_args(args)
    method = args.method
    native = build_region(spec).scheme
    if args.scheme and WeightScheme.parse(args.scheme) is not native and method != "enumerate":
        raise InvalidParameters(f"no closed form for family {spec.family} under {args.scheme}")
    values: dict[str, LaurentQ] = {}
    if method in ("enumerate", "both"):
        values["enumerate"] = tgf(_built(spec, args.scheme))
    if method in ("formula", "both"):
        values["formula"] = formulas.spec_formula(spec)
    status = OK
    if method == "both":
        diff = values["enumerate"] - values["formula"]
        values["difference"] = diff
        status = OK if not diff else FAILED
    if args.out == "json":
        payload = {"spec": spec.to_json(), **{k: v.to_json() for k, v in values.items()}}
        if method == "both":
            payload["equal"] = status == OK
        out.write(json.dumps(payload) + "\n")
    elif args.out == "csv":
        _emit([{"spec": spec.label(), **{k: str(v) for k, v in values.items()}}], "csv", out)
    else:
        out.write(spec.label() + "\n")
        for k, v in values.items():
            out.write(f"{k}: {v}\n")
        if method == "both":
            out.write("equal\n" if status == OK else "MISMATCH\n")
    return status


def cmd_formula(args, out) -> int:
    args.method = "formula"
    return cmd_tgf(args, out)


# -- verify ------------------------------------------------------------------------

def _range(text: str | None, lo: int, default_hi: int) -> range:
    """``"N"`` means ``lo..N``; ``"a:b"`` means ``a..b``; both inclusive."""
    if text is None:
        return range(lo, default_hi + 1)
    text = str(text)
    if ":" in text:
        a, b = text.split(":", 1)
        return range(int(a), int(b) + 1)
    return range(lo, int(text) + 1)


def _subsets(top: int, size: int | None = None) -> Iterable[tuple]:
    sizes = range(top + 1) if size is None else [size]
    for k in sizes:
        yield from combinations(range(1, top + 1), k)


def sweep_specs(families: Iterable[str], xs: range, ns: range, ds: range, us: range) -> list[RegionSpec]:
    out = []
    for fam in families:
        if fam in ("P", "Pprime"):
            out += [RegionSpec(fam, n=n, x=x) for n in ns for x in xs]
        elif fam.startswith("R"):
            for x in xs:
                for n in ns:
                    if n < 1:
                        continue
                    out += [RegionSpec(fam, x=x, s=s) for s in combinations(range(1, n + x + 1), n)]
        elif fam in ("A", "B"):
            out += [RegionSpec(fam, x=x, d=d, l=l) for x in xs for d in ds for l in _subsets(d)]
        elif fam in ("C", "D"):
            out += [RegionSpec(fam, x=x, u=u, h=h) for x in xs for u in us for h in _subsets(u)]
        else:
            out += [
                RegionSpec(fam, x=x, u=u, d=d, l=l, h=h)
                for x in xs for u in us for d in ds for l in _subsets(d) for h in _subsets(u)
            ]
    return out


def check_spec(spec: RegionSpec) -> dict:
    """Formula vs enumeration, palindromicity, and the q = 1 specialization."""
    r = build_region(spec)
    t0 = time.perf_counter()
    enum = tgf(r)
    t1 = time.perf_counter()
    try:
        form = formulas.spec_formula(spec)
        form_ok = form == enum
    except (InexactDivision, ZeroDivisionError, ValueError) as exc:
        form, form_ok = None, False
        form_err = str(exc)
    else:
        form_err = ""
    t2 = time.perf_counter()
    palindromic = enum.is_palindromic()
    at_one = enum.eval_at_one()
    if r.scheme is WeightScheme.SYMMETRIC:
        q1_ok = at_one == tiling_count(r)
    else:
        q1_ok = at_one == weighted_count_at_one(r)
    row = {
        "spec": spec.label(),
        "formula": form_ok,
        "palindromic": palindromic,
        "q1": q1_ok,
        "pass": form_ok and palindromic and q1_ok,
        "enum_ms": round(1000 * (t1 - t0), 3),
        "formula_ms": round(1000 * (t2 - t1), 3),
    }
    if form_err:
        row["error"] = form_err
    return row


def run_sweep(specs: list[RegionSpec], check: Callable = check_spec, workers: int | None = None) -> list[dict]:
    """Checks fan out over threads; rows come back in spec order."""
    workers = workers or threads()
    if workers == 1:
        return [check(s) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check, specs))


def cmd_verify(args, out) -> int:
    name = (args.family or "all").lower()
    families = _GROUPS.get(name)
    if families is None:
        families = tuple(parse_family(f) for f in name.split(","))
    specs = sweep_specs(
        families,
        _range(args.x, 0, 2),
        _range(args.n, 1 if any(f.startswith("R") for f in families) else 0, 3),
        _range(args.d, 0, 2),
        _range(args.u, 0, 2),
    )
    rows = run_sweep(specs)
    if not args.timings:
        for row in rows:
            row.pop("enum_ms")
            row.pop("formula_ms")
    failures = [row for row in rows if not row["pass"]]
    fmt = args.out
    if fmt == "text":
        for row in failures:
            out.write("FAIL  " + "  ".join(f"{k}={v}" for k, v in row.items() if k != "pass") + "\n")
        if args.timings:
            total = sum(r["enum_ms"] for r in rows)
            out.write(f"enumeration time: {total:.1f} ms\n")
        out.write(f"{len(rows)} cases, {len(rows) - len(failures)} passed, {len(failures)} failed\n")
    else:
        _emit(rows, fmt, out)
    return OK if not failures else FAILED


# -- reciprocity -------------------------------------------------------------------

def cmd_reciprocity(args, out) -> int:
    s = _int_list(args.s)
    x = int(args.x) if args.x is not None else max(0, (max(s) if s else 0) - len(s))
    try:
        formulas._check_dents(s, x)
    except ValueError as exc:
        raise InvalidParameters(str(exc)) from None
    pairs = [int(args.pair)] if args.pair else [1, 2]
    status = OK
    rows = []
    for k in pairs:
        if k not in (1, 2):
            raise InvalidParameters("--pair must be 1 (kind 1 -> 3) or 2 (kind 2 -> 4)")
        shifted = formulas.shifted_quartered_formula(k, s)
        target = formulas.quartered_formula(k + 2, x, s)
        equal = shifted == target
        status = status if equal else FAILED
        rows.append({"pair": f"{k}->{k + 2}", "x": x, "s": ",".join(map(str, s)), "equal": equal,
                     "shifted": str(shifted), "target": str(target)})
    if args.out == "text":
        for row in rows:
            out.write(f"kind {row['pair']}  s=({row['s']})  {'equal' if row['equal'] else 'DIFFERENT'}\n")
            if not row["equal"]:
                out.write(f"  shifted: {row['shifted']}\n  target:  {row['target']}\n")
    else:
        _emit(rows, args.out, out)
    return status


# -- kuo ---------------------------------------------------------------------------

def cmd_kuo(args, out) -> int:
    which = args.which or "all"
    rows = []
    if which == "random":
        rng = random.Random(args.seed)
        for k in range(args.count):
            balanced = k % 2 == 0
            g, quad = kuo.random_instance(rng, balanced)
            check = kuo.kuo_identity_balanced if balanced else kuo.kuo_identity_unbalanced
            rows.append({"case": f"random#{k}", "kind": "balanced" if balanced else "unbalanced",
                         "pass": check(g, *quad)})
    elif which == "corners":
        spec = _spec_from_args(args)
        r = build_region(spec)
        g = dual_graph(r)
        for quad in kuo.corner_instances(r, limit=args.count):
            rows.append({"case": ";".join(f"{t.i}/{t.j}" for t in quad), "kind": "balanced",
                         "pass": kuo.kuo_identity_balanced(g, *quad)})
    else:
        names = kuo.RECURRENCES if which == "all" else (which,)
        for name in names:
            if name not in kuo.RECURRENCES:
                raise InvalidParameters(f"unknown recurrence {name!r}")
            if args.family:
                spec = _spec_from_args(args)
                points = [{k: tuple(v) if isinstance(v, list) else v
                           for k, v in spec.to_json().items() if k != "family"}]
            else:
                points = list(kuo.recurrence_grid(name, args.limit))
            oracle = kuo.EnumerationOracle()
            for p in points:
                try:
                    ok = kuo.recurrence_check(name, oracle, **p)
                except kuo.KuoPreconditionError as exc:
                    raise InvalidParameters(str(exc)) from None
                rows.append({"case": name, "kind": json.dumps(p, sort_keys=True), "pass": ok})
    if args.out == "text":
        for row in rows:
            out.write(f"{'pass' if row['pass'] else 'FAIL'}  {row['case']}  {row['kind']}\n")
        failed = sum(1 for row in rows if not row["pass"])
        out.write(f"{len(rows)} checks, {failed} failed\n")
    else:
        _emit(rows, args.out, out)
    return OK if all(row["pass"] for row in rows) else FAILED


# -- render ------------------------------------------------------------------------

def cmd_render(args, out) -> int:
    spec = _spec_from_args(args)
    picture = build_region(spec).render()
    if picture:
        out.write(picture + "\n")
    return OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tgflab", description="Tiling generating functions of halved and quartered hexagons.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, method=False):
        p.add_argument("--family", help=f"one of {', '.join(FAMILIES)}")
        p.add_argument("--x")
        p.add_argument("--n")
        p.add_argument("--d")
        p.add_argument("--u")
        p.add_argument("--s", help="dent positions, e.g. 1,3")
        p.add_argument("--l", help="lower bump positions")
        p.add_argument("--h", help="upper bump positions")
        p.add_argument("--scheme", choices=("wt1", "wt2", "wt3"))
        p.add_argument("--out", choices=("text", "json", "csv"), default="text")
        if method:
            p.add_argument("--method", choices=("enumerate", "formula", "both"), default="enumerate")
        return p

    common(sub.add_parser("tgf", help="tiling generating function of one region"), method=True)
    common(sub.add_parser("formula", help="closed-form value for one region"))
    v = common(sub.add_parser("verify", help="formula vs enumeration over a grid"))
    v.add_argument("--timings", action="store_true", help="add wall-clock columns (output is then not reproducible)")
    r = common(sub.add_parser("reciprocity", help="shifted kind 1/2 formula against kind 3/4"))
    r.add_argument("--pair", choices=("1", "2"))
    k = common(sub.add_parser("kuo", help="condensation identities and recurrences"))
    k.add_argument("--which", default="all", help="a recurrence name, 'all', 'random' or 'corners'")
    k.add_argument("--limit", type=int, default=3, help="grid size for recurrence sweeps")
    k.add_argument("--count", type=int, default=50, help="instances for 'random' / cap for 'corners'")
    k.add_argument("--seed", type=int, default=0)
    common(sub.add_parser("render", help="ASCII picture of a region"))
    return ap


_COMMANDS = {
    "tgf": cmd_tgf,
    "formula": cmd_formula,
    "verify": cmd_verify,
    "reciprocity": cmd_reciprocity,
    "kuo": cmd_kuo,
    "render": cmd_render,
}


def _int_flags(args):
    for name in ("x", "n", "d", "u"):
        value = getattr(args, name, None)
        if value is None or args.command == "verify":
            continue
        try:
            setattr(args, name, int(value))
        except ValueError:
            raise InvalidParameters(f"--{name} must be an integer, got {value!r}") from None


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        _int_flags(args)
        return _COMMANDS[args.command](args, out)
    except InvalidParameters as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return USAGE
    except InexactDivision as exc:
        print(f"formula error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    raise SystemExit(main())
