"""Command-line entry point: ``grassbound <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 on domain errors; the
latter print a single JSON line ``{"error": {...}}`` on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import BOUND_KINDS, compare, valid_parameters
from .config import load_tolerances
from .geometry import SubspaceFrame, distance_spectrum, parse_metric
from .hilbert import hilbert_value
from .leading import InvariantViolation, leading_term_report
from .polymethod import RankUnsaturated, lemma51_count, sampled_hilbert_rank, verify_prop31
from .ideal_families import family_rank, quadrics_rank
from .scalars import DomainError, format_rational
from .symfun import jack_expansion_coeffs


class MalformedInput(ValueError):
    pass


def _int_range(text: str) -> list[int]:
    """``"3"`` or ``"1..5"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo..hi, got {text!r}") from None


def _manifest(argv: list[str], tol, seed=None) -> dict:
    return {
        "command": "grassbound " + " ".join(argv),
        "seed": seed,
        "tolerances": tol.as_dict(),
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _emit_json(payload: dict, ctx) -> None:
    payload = dict(payload)
    payload["manifest"] = _manifest(ctx.argv, ctx.tol, getattr(ctx.args, "seed", None))
    print(json.dumps(payload))


# ---------------------------------------------------------------- handlers


def cmd_bound(ctx) -> int:
    a = ctx.args
    rep = compare(a.bound, a.k, a.n, a.s)
    if a.json or a.baseline:
        out = rep.to_dict()
        if not a.baseline:
            for key in ("baseline", "baseline_name", "improvement"):
                out.pop(key, None)
        _emit_json(out, ctx)
    else:
        print(rep.to_dict()["value"])
    return 0


def _table_row(cell):
    bound, k, n, s = cell
    rep = compare(bound, k, n, s).to_dict()
    return [k, n, s, rep["value"], rep["kind"], rep.get("baseline", ""), rep.get("improvement", "")]


def cmd_table(ctx) -> int:
    a = ctx.args
    cells = [(a.bound, k, n, s) for k in a.k for n in a.n for s in a.s if valid_parameters(a.bound, k, n, s)]
    if a.workers > 1:
        with ProcessPoolExecutor(max_workers=a.workers) as pool:
            rows = list(pool.map(_table_row, cells))
    else:
        rows = [_table_row(c) for c in cells]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "n", "s", "value", "kind", "baseline", "improvement"])
    writer.writerows(rows)
    if a.output:
        out = Path(a.output)
        out.write_text(buf.getvalue())
        manifest = _manifest(ctx.argv, ctx.tol)
        Path(str(out) + ".manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    else:
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_hilbert(ctx) -> int:
    a = ctx.args
    if a.hilbert_cmd == "plucker":
        value = hilbert_value(a.k, a.n, a.degree, method=a.method)
        payload = {"k": a.k, "n": a.n, "degree": a.degree, "method": a.method, "value": value}
    else:
        value = sampled_hilbert_rank(a.k, a.n, a.degree, num_samples=a.samples, seed=a.seed, rank_factor=ctx.tol.rank_factor)
        payload = {"k": a.k, "n": a.n, "degree": a.degree, "seed": a.seed, "value": value}
    if a.json:
        _emit_json(payload, ctx)
    else:
        print(value)
    return 0


def cmd_coeff(ctx) -> int:
    a = ctx.args
    rep = leading_term_report(a.k, a.n)
    if a.json:
        _emit_json(
            {
                "k": a.k,
                "n": a.n,
                "d_kn": format_rational(rep.d_kn),
                "dim": rep.dim,
                "leading_coeff": format_rational(rep.leading_coeff),
            },
            ctx,
        )
    else:
        print(format_rational(rep.d_kn))
    return 0


def cmd_jack(ctx) -> int:
    k = ctx.args.k
    coeffs = [
        {"partition": list(lam), "coeff": format_rational(c)} for lam, c in jack_expansion_coeffs(k).items()
    ]
    _emit_json({"k": k, "alpha": 2, "normalization": "P", "coefficients": coeffs}, ctx)
    return 0


def _load_frames(path: str, tol_orth: float) -> list[SubspaceFrame]:
    try:
        data = json.loads(Path(path).read_text())
        n, k = int(data["n"]), int(data["k"])
        raw = data["frames"]
        tol_orth = float(data.get("tol_orth", tol_orth))
    except FileNotFoundError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedInput(f"cannot read frame file {path}: {exc}") from None
    frames = []
    for idx, entry in enumerate(raw):
        arr = np.asarray(entry, dtype=float)
        if arr.size != n * k:
            raise MalformedInput(f"frame {idx} has {arr.size} entries, expected n*k = {n * k}")
        frames.append(SubspaceFrame(arr.reshape(n, k), tol_orth=tol_orth))
    return frames


def cmd_verify(ctx) -> int:
    a = ctx.args
    frames = _load_frames(a.file, ctx.tol.tol_orth)
    metric = parse_metric(a.metric)
    spectrum = distance_spectrum(frames, metric, ctx.tol.tol_cluster)
    payload = {"n": frames[0].n, "k": frames[0].k, "count": len(frames)}
    payload.update(spectrum.to_dict())
    if a.check == "rank":
        rep = verify_prop31(
            frames,
            metric,
            spectrum=spectrum,
            tol_diag=ctx.tol.tol_diag,
            rank_factor=ctx.tol.rank_factor,
            seed=a.seed,
        )
        payload.update(rep.to_dict())
    _emit_json(payload, ctx)
    return 0


def cmd_lemma51(ctx) -> int:
    a = ctx.args
    rank = quadrics_rank(a.n, a.k) if a.d == 2 else family_rank(a.n, a.d, a.k)
    expected = lemma51_count(a.n, a.d)
    _emit_json({"n": a.n, "d": a.d, "k": a.k, "rank": rank, "expected": expected, "independent": rank == expected}, ctx)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="grassbound", description="Bounds for s-distance sets of subspaces.", allow_abbrev=False
    )
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--config", help="TOML file with a [tolerances] table (default: $GRASSBOUND_CONFIG)")
    p.add_argument("--tol-orth", type=float)
    p.add_argument("--tol-diag", type=float)
    p.add_argument("--rank-factor", type=float)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate one bound")
    b.add_argument("bound", choices=BOUND_KINDS)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--s", type=int, default=1)
    b.add_argument("--baseline", action="store_true", help="include the prior bound and the improvement")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound)

    t = sub.add_parser("table", help="CSV table of a bound over a parameter grid")
    t.add_argument("bound", choices=BOUND_KINDS)
    t.add_argument("--k", type=_int_range, default=[1])
    t.add_argument("--n", type=_int_range, required=True)
    t.add_argument("--s", type=_int_range, default=[1])
    t.add_argument("-o", "--output")
    t.add_argument("--workers", type=int, default=1)
    t.set_defaults(func=cmd_table)

    h = sub.add_parser("hilbert", help="Hilbert functions")
    hs = h.add_subparsers(dest="hilbert_cmd", required=True)
    hp = hs.add_parser("plucker")
    hp.add_argument("--k", type=int, required=True)
    hp.add_argument("--n", type=int, required=True)
    hp.add_argument("--degree", type=int, required=True)
    hp.add_argument("--method", choices=("closed", "series"), default="closed")
    hp.add_argument("--json", action="store_true")
    hr = hs.add_parser("projection-rank")
    hr.add_argument("--k", type=int, required=True)
    hr.add_argument("--n", type=int, required=True)
    hr.add_argument("--degree", type=int, required=True)
    hr.add_argument("--seed", type=int, default=0)
    hr.add_argument("--samples", type=int)
    hr.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    c = sub.add_parser("coeff", help="leading coefficients")
    cs = c.add_subparsers(dest="coeff_cmd", required=True)
    cd = cs.add_parser("dkn")
    cd.add_argument("--k", type=int, required=True)
    cd.add_argument("--n", type=int, required=True)
    cd.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_coeff)

    j = sub.add_parser("jack", help="Jack expansion coefficients")
    js = j.add_subparsers(dest="jack_cmd", required=True)
    je = js.add_parser("expand")
    je.add_argument("--k", type=int, required=True)
    j.set_defaults(func=cmd_jack)

    v = sub.add_parser("verify", help="distance spectrum and rank check of a frame file")
    v.add_argument("file")
    v.add_argument("--metric", required=True, help="chordal, fs or angle:<i>")
    v.add_argument("--tol", type=float, help="clustering tolerance")
    v.add_argument("--check", choices=("rank",))
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    lm = sub.add_parser("lemma51", help="exact rank of the ideal polynomial families")
    lm.add_argument("--n", type=int, required=True)
    lm.add_argument("--d", type=int, required=True)
    lm.add_argument("--k", type=int, default=2)
    lm.set_defaults(func=cmd_lemma51)
    return p


class _Context:
    def __init__(self, argv, args, tol):
        self.argv, self.args, self.tol = argv, args, tol


def _error(kind: str, message: str, **extra) -> int:
    err = {"type": kind, "message": message}
    err.update(extra)
    print(json.dumps({"error": err}), file=sys.stderr)
    return 1


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = load_tolerances(
            args.config,
            tol_orth=args.tol_orth,
            tol_diag=args.tol_diag,
            rank_factor=args.rank_factor,
            tol_cluster=getattr(args, "tol", None),
        )
        return args.func(_Context(argv, args, tol))
    except InvariantViolation as exc:
        return _error("InvariantViolation", str(exc), invariant=exc.name)
    except (DomainError, MalformedInput, RankUnsaturated) as exc:
        return _error(type(exc).__name__, str(exc))
    except FileNotFoundError as exc:
        return _error("FileNotFound", str(exc))
    except ValueError as exc:
        return _error("ValueError", str(exc))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
