"""Command-line front end.

Results go to stdout as newline-delimited JSON (or text with
``--format text``); progress goes to stderr.  Exit status is 0 on
success, 1 when a ``verify`` sweep finds a counterexample and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager

from . import verify
from .abcs import abc_counts, enumerate_abcs, spin_k
from .corelab import (
    core_to_bounded,
    degree,
    is_core,
    make_partition,
    residues,
)
from .poset import (
    bottom_strong_strip,
    bottom_strong_strips,
    marked_covers_up,
    strong_strips_from,
    weak_covers_up,
    weak_strip,
    weak_strip_chains,
)
from .symfunc import (
    conjecture_explorer,
    dual_kschur_expand,
    expansion_json,
    format_expansion,
    h_expand,
    hall_littlewood_expand,
    in_kschur_span,
    kschur,
    kschur_coefficients,
    schur_expand,
)
from .tableaux import enumerate_k_tableaux
from .tpoly import TPoly

DESK_DEGREE = 8
DESK_N = 6


class UsageError(Exception):
    pass


def parse_partition(text: str | None, what: str = "partition"):
    if text is None:
        return None
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return ()
    try:
        return make_partition(int(x) for x in text.split(","))
    except ValueError as e:
        raise UsageError(f"malformed {what} {text!r}: {e}") from None


def parse_weight(text: str) -> tuple[int, ...]:
    """Composition such as ``3,3,1``; ``1^5`` abbreviates five ones."""
    out = []
    try:
        for tok in text.split(","):
            tok = tok.strip()
            if "^" in tok:
                part, times = tok.split("^")
                out.extend([int(part)] * int(times))
            elif tok:
                out.append(int(tok))
    except ValueError:
        raise UsageError(f"malformed weight {text!r}") from None
    if any(x <= 0 for x in out):
        raise UsageError(f"weight parts must be positive: {text!r}")
    return tuple(out)


def _require(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def _require_core(shape, k, flag):
    if not is_core(shape, k):
        raise UsageError(f"{flag} {list(shape)} is not a {k + 1}-core")
    return shape


def _require_ell(ell, k):
    if not 0 < ell <= k:
        raise UsageError(f"--ell must satisfy 0 < ell <= k={k}")
    return ell


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, obj, text: str | None = None):
        if self.fmt == "json":
            self.stream.write(_dump(obj) + "\n")
        else:
            self.stream.write((text if text is not None else _dump(obj)) + "\n")


def _rows_text(rows) -> str:
    """Rows given bottom-up, printed top row first."""
    return "\n".join(
        " ".join("." if v is None else str(v) for v in row) for row in reversed(rows)
    )


@contextmanager
def _mapper(jobs: int):
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield pool.map


# -- subcommands --------------------------------------------------------------


def cmd_core(args, out: Output) -> int:
    k = _require(args.k, "--k")
    shape = parse_partition(_require(args.shape, "--shape"), "shape")
    if args.action == "check":
        obj = {"is_core": is_core(shape, k), "degree": degree(shape, k)}
        out.emit(obj, f"is_core={obj['is_core']} degree={obj['degree']}")
        return 0
    _require_core(shape, k, "--shape")
    if args.action == "residues":
        res = residues(shape, k)
        rows = [[res[(r, c)] for c in range(1, n + 1)] for r, n in enumerate(shape, start=1)]
        out.emit({"residues": rows, "bounded": list(core_to_bounded(shape, k))}, _rows_text(rows))
        return 0
    if args.order == "weak":
        for up in weak_covers_up(shape, k):
            out.emit({"upper": list(up)}, str(list(up)))
    else:
        for mc in marked_covers_up(shape, k):
            out.emit({"upper": list(mc.upper), "mark": mc.mark}, f"{list(mc.upper)} mark={mc.mark}")
    return 0


def _emit_strip(out: Output, strip, label: str = ""):
    if strip is None:
        out.emit({"chain": None, "marks": None}, "no strip")
        return
    obj = strip.to_json()
    text = " < ".join(str(p) for p in obj["chain"])
    if obj["marks"]:
        text += f"  marks={obj['marks']}"
    out.emit(obj, text)


def cmd_strips(args, out: Output) -> int:
    k = _require(args.k, "--k")
    lam = _require_core(parse_partition(_require(args.lam, "--lambda"), "lambda"), k, "--lambda")
    ell = _require_ell(_require(args.ell, "--ell"), k)
    nu = parse_partition(args.nu, "nu")
    gam = parse_partition(args.gamma, "gamma")
    for p, flag in ((nu, "--nu"), (gam, "--gamma")):
        if p is not None:
            _require_core(p, k, flag)
    if args.action == "weak":
        if nu is not None:
            _emit_strip(out, weak_strip(lam, nu, ell, k))
        else:
            from .poset import WeakStrip

            for chain in sorted(weak_strip_chains(lam, k, ell), key=lambda c: c[-1]):
                _emit_strip(out, WeakStrip(chain))
    elif args.action == "strong":
        strips = sorted(
            strong_strips_from(lam, ell, k, gam), key=lambda s: (s.chain[-1], s.chain, s.contents)
        )
        for s in strips:
            _emit_strip(out, s)
    else:
        if nu is not None:
            _emit_strip(out, bottom_strong_strip(lam, nu, ell, k))
        else:
            for s in bottom_strong_strips(lam, ell, k):
                _emit_strip(out, s)
    return 0


def cmd_tableaux(args, out: Output) -> int:
    k = _require(args.k, "--k")
    shape = _require_core(parse_partition(_require(args.shape, "--shape"), "shape"), k, "--shape")
    alpha = parse_weight(_require(args.weight, "--weight"))
    if sum(alpha) != degree(shape, k):
        raise UsageError(f"--weight must sum to the degree {degree(shape, k)} of the shape")
    for t in enumerate_k_tableaux(shape, alpha, k):
        out.emit(t.to_json(), _rows_text(t.rows) + "\n")
    return 0


def cmd_abc(args, out: Output) -> int:
    k = _require(args.k, "--k")
    alpha = parse_weight(_require(args.weight, "--weight"))
    if any(a > k for a in alpha):
        raise UsageError(f"--weight parts must not exceed k={k}")
    inner = parse_partition(args.inner, "inner")
    if inner is not None:
        _require_core(inner, k, "--inner")
    if args.action == "count":
        counts = abc_counts(k, alpha)
        items = [(inner, counts.get(inner, 0))] if inner is not None else counts.items()
        for lam, c in items:
            out.emit({"inner": list(lam), "count": c}, f"{list(lam)}: {c}")
        return 0
    abcs = [a for a in enumerate_abcs(k, alpha) if inner is None or a.inner == inner]
    if args.action == "enumerate":
        for a in abcs:
            out.emit(a.to_json(), a.render() + "\n")
        return 0
    if any(x != 1 for x in alpha):
        raise UsageError("spin is defined for standard weights 1^n only")
    spins = []
    for a in abcs:
        rep = spin_k(a)
        spins.append(rep.total)
        obj = {"inner": list(a.inner), "rows": a.rows(), "spin": rep.to_json()}
        out.emit(obj, a.render() + f"\nspin={rep.total} (base {rep.base}, offsets {rep.offsets})\n")
    if inner is not None:
        gf = TPoly.from_exponents(spins)
        out.emit({"inner": list(inner), "generating_function": gf.to_json()}, f"sum t^spin = {gf}")
    return 0


def cmd_expand(args, out: Output) -> int:
    shape = parse_partition(args.shape, "shape")
    mu = parse_partition(args.mu, "mu")
    p = shape if shape is not None else mu
    if p is None:
        raise UsageError("one of --shape or --mu is required")
    kind = args.action
    if kind in ("dual-kschur", "kschur") or args.basis == "kschur":
        k = _require(args.k, "--k")
    else:
        k = args.k
    if kind == "h":
        f = h_expand(p)
    elif kind == "schur":
        f = schur_expand(p)
    elif kind == "hl":
        f = hall_littlewood_expand(p)
    elif kind == "dual-kschur":
        _require_core(p, k, "--shape")
        if args.basis == "kschur":
            raise UsageError("dual k-Schur functions live in the quotient; use --basis m")
        f = dual_kschur_expand(k, p)
    else:
        _require_core(p, k, "--shape")
        f = kschur(k, p)
    if args.basis == "m":
        terms = f.to_json()
        text = " + ".join(f"({c}) m{list(m)}" for m, c in f.terms.items()) or "0"
        out.emit(terms, text)
        return 0
    coeffs = kschur_coefficients(k, f, strict=False)
    exact = in_kschur_span(k, f)
    out.emit(
        {"degree": f.degree, "k": k, "in_span": exact, "terms": expansion_json(coeffs)},
        format_expansion(coeffs, "s^(k)") + ("" if exact else "   [projection; not in span]"),
    )
    return 0


def cmd_verify(args, out: Output) -> int:
    check = args.action
    with _mapper(args.jobs) as mapper:
        if check == "kostka-spin":
            n = _require(args.n, "--n")
            _warn_bound(n, DESK_N, "--n")
            print(f"kostka-spin: n <= {n}", file=sys.stderr)
            report = verify.kostka_spin(n, mapper)
        else:
            k = _require(args.k, "--k")
            d = _require(args.max_degree, "--max-degree")
            _warn_bound(d, DESK_DEGREE, "--max-degree")
            print(f"{check}: k={k}, degree <= {d}", file=sys.stderr)
            fn = {
                "weak-strong": verify.weak_strong,
                "dual-pieri": verify.dual_pieri,
                "bijection-count": verify.bijection_count,
            }[check]
            report = fn(k, d, mapper)
    n_bad = len(report["counterexamples"])
    report["summary"] = f"{n_bad} counterexamples"
    out.emit(report, f"{check}: checked {report['checked']}, {n_bad} counterexamples")
    return 1 if n_bad else 0


def cmd_explore(args, out: Output) -> int:
    k = _require(args.k, "--k")
    n = _require(args.n, "--n")
    _warn_bound(n, DESK_N, "--n")
    rep = conjecture_explorer(k, n, args.normalization)
    for row in rep["rows"]:
        flags = " ".join(f"{key}={row[key]}" for key in ("count_match", "identity_match", "reversed_match") if key in row)
        text = f"{row['core']}: hl={TPoly(row['hl_coeff'])}  spin={TPoly(row['spin_gf'])}  {flags}"
        out.emit(row, text)
    summary = {key: rep[key] for key in ("k", "n", "hl_in_span", "max_spin", "counts_ok")}
    out.emit(summary, " ".join(f"{a}={b}" for a, b in summary.items()))
    return 0


def _warn_bound(value, limit, flag):
    if value > limit:
        print(f"warning: {flag} {value} exceeds desk scale ({limit}); this may be slow", file=sys.stderr)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--k", type=int)

    p = argparse.ArgumentParser(prog="kschur", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("core", parents=[common])
    c.add_argument("action", choices=("check", "covers", "residues"))
    c.add_argument("--shape")
    c.add_argument("--order", choices=("weak", "strong"), default="weak")

    s = sub.add_parser("strips", parents=[common])
    s.add_argument("action", choices=("weak", "strong", "bottom"))
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--nu")
    s.add_argument("--gamma")
    s.add_argument("--ell", type=int)

    t = sub.add_parser("tableaux", parents=[common])
    t.add_argument("action", choices=("enumerate",))
    t.add_argument("--shape")
    t.add_argument("--weight")

    a = sub.add_parser("abc", parents=[common])
    a.add_argument("action", choices=("enumerate", "count", "spin"))
    a.add_argument("--weight")
    a.add_argument("--inner")

    e = sub.add_parser("expand", parents=[common])
    e.add_argument("action", choices=("h", "schur", "dual-kschur", "kschur", "hl"))
    e.add_argument("--shape")
    e.add_argument("--mu")
    e.add_argument("--basis", choices=("m", "kschur"), default="m")

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("action", choices=("weak-strong", "dual-pieri", "bijection-count", "kostka-spin"))
    v.add_argument("--max-degree", type=int, help=f"desk scale: <= {DESK_DEGREE}")
    v.add_argument("--n", type=int, help=f"desk scale: <= {DESK_N}")

    x = sub.add_parser("explore", parents=[common])
    x.add_argument("action", choices=("conjecture",))
    x.add_argument("--n", type=int, help=f"desk scale: <= {DESK_N}")
    x.add_argument("--normalization", choices=("identity", "reversed", "both"), default="both")
    return p


COMMANDS = {
    "core": cmd_core,
    "strips": cmd_strips,
    "tableaux": cmd_tableaux,
    "abc": cmd_abc,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "explore": cmd_explore,
}


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.k is not None and args.k < 1:
        print("error: --k must be positive", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args, Output(args.format, stdout))
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
