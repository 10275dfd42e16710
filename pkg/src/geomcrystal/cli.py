"""Command line entry point: ``geomcrystal verify|tableau|trop|net``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import parametrization as pm
from . import tableaux as tb
from . import tropical as tp
from . import verify as vf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str):
    """``"3"``, ``"2-5"`` or ``"2,4,5"``."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part[1:]:
                a, b = part.split("-", 1)
                out += list(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from None
    return tuple(out)


def _default_seed():
    env = os.environ.get("GEOMCRYSTAL_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"GEOMCRYSTAL_SEED must be an integer, got {env!r}") from None


def _read_input(arg):
    if arg is None or arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def cmd_verify(a):
    suites = tuple(s.strip() for s in a.suites.split(",")) if a.suites else vf.SUITES
    unknown = [s for s in suites if s not in vf.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(vf.SUITES)}")
    n_values = a.n or (2, 3, 4, 5)
    if any(n < 2 for n in n_values):
        raise UsageError("n must be at least 2")
    if a.L_max < 0 or a.trials < 1:
        raise UsageError("--L-max must be >= 0 and --trials >= 1")
    seed = a.seed if a.seed is not None else _default_seed()
    cfg = vf.Config(n_values=tuple(n_values), k_values=a.k, L_max=a.L_max, trials=a.trials,
                    seed=seed, suites=suites, timing=a.timing, jobs=a.jobs)
    records = vf.run_suites(cfg)
    rep = vf.report(cfg, records)
    text = json.dumps(rep, indent=2, sort_keys=True) + "\n"
    if a.out and a.out != "-":
        with open(a.out, "w") as fh:
            fh.write(text)
        s = rep["summary"]
        print(f"{s['total'] - s['failed']}/{s['total']} checks passed; report written to {a.out}",
              file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep["summary"]["failed"] == 0 else EXIT_FAIL


_TABLEAU_OPS = ("promote", "promote-inverse", "evacuate", "e", "f", "bk", "stats", "gt", "rotate")


def cmd_tableau(a):
    try:
        T = tb.Tableau.parse(_read_input(a.input), a.n)
    except tb.TableauError as exc:
        raise UsageError(f"invalid tableau: {exc}") from None
    op = a.op
    if op in ("e", "f", "bk", "stats") and a.i is None:
        raise UsageError(f"--i is required for {op}")
    if op == "rotate" or (op in ("e", "f", "stats") and a.i == 0):
        if not T.is_rectangular():
            raise UsageError(f"{op} needs a rectangular tableau")
    if a.i is not None and not 0 <= a.i <= a.n - 1:
        raise UsageError(f"--i must lie in [0, {a.n - 1}]")
    if op == "promote":
        out = tb.promote(T)
    elif op == "promote-inverse":
        out = tb.promote_inverse(T)
    elif op == "evacuate":
        out = tb.evacuate(T)
    elif op == "rotate":
        out = tb.rotate_tableau(T)
    elif op in ("e", "f"):
        out = tb.crystal_op(T, a.i, op)
        if out is tb.UNDEFINED:
            print("undefined")
            return EXIT_OK
    elif op == "bk":
        if a.i == 0:
            raise UsageError("bk needs --i in [1, n-1]")
        out = tb.bender_knuth(T, a.i)
    elif op == "stats":
        ep, ph = tb.crystal_stats(T, a.i)
        print(json.dumps({"eps": ep, "phi": ph, "weight": list(T.content())}))
        return EXIT_OK
    else:
        A = tb.gt_from_tableau(T)
        print("\n".join(" ".join(map(str, r)) for r in A.rows))
        return EXIT_OK
    print(str(out))
    return EXIT_OK


def cmd_trop(a):
    try:
        obj = json.loads(_read_input(a.rect))
        b = tb.KRectangle.from_json(obj)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid rectangle JSON: {exc}") from None
    if not 1 <= b.k <= b.n - 1:
        raise UsageError("need 1 <= k <= n-1")
    name = a.map
    if name in ("PR", "PRinv", "S", "D"):
        out = tp.trop_apply(tp.build_symbolic(name, b.n, b.k), b)
        res = out.to_json()
    elif name == "f":
        val = tp.trop_apply(tp.build_symbolic("f", b.n, b.k), b)
        res = {"f": val, "is_rectangle": val >= 0}
    elif name[0] == "e" and name[-1] in "+-" and name[1:-1].isdigit():
        i = int(name[1:-1])
        if not 0 <= i < b.n:
            raise UsageError(f"index {i} out of range")
        env = tp.rect_env([b], b.n, b.k)
        outs = tp.trop_e(b.n, b.k, i, env, 1 if name[-1] == "+" else -1)
        img = tp.env_to_rects(outs, b.n, b.k)[0]
        fval = tp.trop_apply(tp.build_symbolic("f", b.n, b.k), img)
        res = dict(img.to_json(), defined=fval >= 0)
    else:
        raise UsageError(f"unknown map {name!r}; use PR, PRinv, S, D, f or e<i>+ / e<i>-")
    print(json.dumps(res, sort_keys=True))
    return EXIT_OK


def cmd_net(a):
    if not 1 <= a.k <= a.n - 1:
        raise UsageError("need 1 <= k <= n-1")
    sys.stdout.write(pm.to_dot(pm.grassmann_network(a.n, a.k), name=f"N_{a.k}"))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="geomcrystal", description="Exact checks for the affine "
                                "geometric crystal on the Grassmannian and rectangular tableaux.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and emit a JSON report")
    v.add_argument("--n", type=_int_list, help="n values, e.g. 4 or 2-5 or 2,3,5 (default 2-5)")
    v.add_argument("--k", type=_int_list, help="k values (default: all 1 <= k <= n-1)")
    v.add_argument("--L-max", dest="L_max", type=int, default=3)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=None, help="default: $GEOMCRYSTAL_SEED or 0")
    v.add_argument("--suites", help="comma-separated subset of " + ",".join(vf.SUITES))
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--timing", action="store_true", help="add elapsed_ms to each record")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tableau", help="apply a tableau operation")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--op", choices=_TABLEAU_OPS, required=True)
    t.add_argument("--i", type=int)
    t.add_argument("input", nargs="?", help="tableau text, a file, or - for stdin")
    t.set_defaults(func=cmd_tableau)

    r = sub.add_parser("trop", help="apply a tropicalized map to an integer rectangle")
    r.add_argument("--map", required=True, help="PR, PRinv, S, D, f, or e<i>+ / e<i>-")
    r.add_argument("rect", nargs="?", help='JSON like {"B":[2,5,1,3],"L":6,"n":4,"k":2}')
    r.set_defaults(func=cmd_trop)

    nt = sub.add_parser("net", help="print the planar network as DOT")
    nt.add_argument("--n", type=int, required=True)
    nt.add_argument("--k", type=int, required=True, help="number of sinks")
    nt.set_defaults(func=cmd_net)
    return p


def main(argv=None):
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except UsageError as exc:
        print(f"geomcrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
