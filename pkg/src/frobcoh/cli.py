"""Command-line front end.

::

    frobcoh --input x0_23.txt --format json --timing
    frobcoh --input x0_23.txt --bench 3,5,7,11,13,17 --timing

Exit status is 0 on success, 1 on an input error (bad file, parse error,
violated hypothesis) and 2 when an internal invariant fails.  Output is
assembled in full before anything is written, so a failing run prints only
its diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import FrobcohError, InputError, InvariantViolation, UsageError
from .frobenius import FrobeniusReport, dispatch
from .oracles import AffineHyperellipticModel, hyperelliptic_hw
from .cohomo import fp_charpoly, fp_rank
from .polyparse import affine_model, parse_problem, read_problem_file

__all__ = ["CliConfig", "run", "bench", "report_to_json", "main"]

DUMP_KEYS = ("resolution", "lifts", "basis")
_ALGORITHM_FLAGS = {"auto": "auto", "general": "general", "ci": "complete_intersection"}


@dataclass(frozen=True)
class CliConfig:
    """Parsed command line.

    ``timing`` controls whether wall-clock times are reported; without it
    the ``timings`` values are ``null`` so that JSON output is reproducible.
    """

    input: str
    format: str = "text"
    algorithm: str | None = None
    dump: frozenset = frozenset()
    timing: bool = False

    def __post_init__(self):
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.algorithm is not None and self.algorithm not in _ALGORITHM_FLAGS:
            raise UsageError(f"unknown algorithm {self.algorithm!r}")
        bad = set(self.dump) - set(DUMP_KEYS)
        if bad:
            raise UsageError(f"unknown dump flag(s): {', '.join(sorted(bad))}")


# --------------------------------------------------------------------------
# serialization


def _ms(seconds):
    return round(seconds * 1000.0, 3)


def _hom_dump(h):
    return {
        "source_twists": list(h.source.twists),
        "target_twists": list(h.target.twists),
        "matrix": [[g.to_string() for g in row] for row in h.matrix],
    }


def report_to_json(rep: FrobeniusReport, *, timing: bool = False, dump=frozenset()) -> dict:
    """Report as a JSON-ready dict with a fixed key order."""
    out = {
        "p": rep.p,
        "r": rep.r,
        "q": rep.q,
        "algorithm_used": rep.algorithm_used,
        "h_dim": rep.h_dim,
        "matrix": rep.matrix.tolist(),
        "rank": rep.rank,
        "char_poly": [int(c) for c in rep.char_poly],
        "basis": list(rep.basis),
        "D": rep.D,
        "alpha": rep.alpha,
        "timings": {
            "step_a_ms": _ms(rep.timings["step_a"]) if timing else None,
            "step_b_ms": _ms(rep.timings["step_b"]) if timing else None,
        },
    }
    if "resolution" in dump:
        R = rep.extras.get("resolution")
        out["resolution"] = None if R is None else [_hom_dump(h) for h in R.maps]
    if "lifts" in dump:
        psi = rep.extras.get("lifts")
        out["lifts"] = None if psi is None else [_hom_dump(h) for h in psi]
    if "basis" in dump:
        B = rep.extras.get("B")
        out["basis_coordinates"] = None if B is None else B.tolist()
    return out


def _poly_string(coeffs) -> str:
    """Descending coefficient list as a polynomial in ``a``."""
    n = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        e = n - i
        if not c:
            continue
        mono = "" if e == 0 else ("a" if e == 1 else f"a^{e}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) or "0"


def _format_text(d: dict) -> str:
    lines = [
        f"p = {d['p']}, r = {d['r']}, q = {d['q']}",
        f"algorithm: {d['algorithm_used']}",
        f"h_dim: {d['h_dim']}",
        "basis:",
    ]
    lines += [f"  [{i}] {b}" for i, b in enumerate(d["basis"])]
    lines.append("matrix:")
    lines += ["  [" + " ".join(str(x) for x in row) + "]" for row in d["matrix"]]
    lines.append(f"rank: {d['rank']}")
    lines.append(f"char_poly: {_poly_string(d['char_poly'])}  {d['char_poly']}")
    lines.append(f"D: {d['D']}")
    lines.append(f"alpha: {'-' if d['alpha'] is None else d['alpha']}")
    t = d["timings"]
    if t["step_a_ms"] is not None:
        lines.append(f"timings: step_a {t['step_a_ms']} ms, step_b {t['step_b_ms']} ms")
    for key in ("resolution", "lifts"):
        if key in d:
            lines.append(f"{key}:")
            if d[key] is None:
                lines.append("  (not computed by this algorithm)")
                continue
            for i, h in enumerate(d[key], 1):
                lines.append(f"  map {i}: {h['source_twists']} -> {h['target_twists']}")
                lines += ["    [" + ", ".join(row) + "]" for row in h["matrix"]]
    if "basis_coordinates" in d:
        lines.append("basis_coordinates:")
        if d["basis_coordinates"] is None:
            lines.append("  (not computed by this algorithm)")
        else:
            lines += ["  [" + " ".join(str(x) for x in row) + "]"
                      for row in d["basis_coordinates"]]
    return "\n".join(lines)


# --------------------------------------------------------------------------
# commands


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _algorithm(config):
    return None if config.algorithm is None else _ALGORITHM_FLAGS[config.algorithm]


def _guard(fn, err):
    try:
        return 0, fn()
    except InvariantViolation as exc:
        print(f"frobcoh: internal invariant violated: {exc}", file=err)
        return 2, None
    except (InputError, UsageError) as exc:
        print(f"frobcoh: error: {exc}", file=err)
        return 1, None


def run(config: CliConfig, out=None, err=None) -> int:
    """Compute one report and write it to ``out``; return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err

    def work():
        spec = parse_problem(_read(config.input), algorithm=_algorithm(config))
        d = report_to_json(dispatch(spec), timing=config.timing, dump=config.dump)
        if config.format == "json":
            return json.dumps(d, indent=2)
        return _format_text(d)

    status, text = _guard(work, err)
    if status == 0:
        print(text, file=out)
    return status


def _oracle_cell(pf, p):
    model = affine_model(pf, p)
    if model is None:
        return None
    M = hyperelliptic_hw(AffineHyperellipticModel(tuple(model[0]), tuple(model[1]), p))
    return {"rank": fp_rank(M), "char_poly": fp_charpoly(M)}


def bench(config: CliConfig, primes) -> list:
    """One row per prime, in the given order; failures are kept per row.

    Each row holds ``p``, ``rank``, ``char_poly``, ``D``, ``alpha``,
    ``step_a_ms``, ``step_b_ms``, ``oracle`` (``None`` without an affine
    model) and ``error`` (``None`` on success).
    """
    text = _read(config.input)
    pf = read_problem_file(text)
    rows = []
    for p in primes:
        row = {"p": p, "rank": None, "char_poly": None, "D": None, "alpha": None,
               "step_a_ms": None, "step_b_ms": None, "oracle": None, "error": None}
        try:
            rep = dispatch(parse_problem(text, p=p, algorithm=_algorithm(config)))
            row.update(rank=rep.rank, char_poly=[int(c) for c in rep.char_poly], D=rep.D,
                       alpha=rep.alpha)
            if config.timing:
                row.update(step_a_ms=_ms(rep.timings["step_a"]),
                           step_b_ms=_ms(rep.timings["step_b"]))
            oracle = _oracle_cell(pf, p)
            if oracle is not None:
                oracle["agrees"] = (oracle["rank"] == rep.rank
                                    and oracle["char_poly"] == row["char_poly"])
                row["oracle"] = oracle
        except FrobcohError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def _format_table(rows) -> str:
    head = ["p", "rank", "char_poly", "D", "alpha", "step_a_ms", "step_b_ms", "oracle"]
    cells = [head]
    for row in rows:
        if row["error"] is not None and row["rank"] is None:
            cells.append([str(row["p"]), "error: " + row["error"]])
            continue
        oracle = row["oracle"]
        if row["error"] is not None:
            ocell = "error: " + row["error"]
        elif oracle is None:
            ocell = "-"
        else:
            ocell = "agree" if oracle["agrees"] else "DIFFER"
        cells.append([
            str(row["p"]), str(row["rank"]), _poly_string(row["char_poly"]), str(row["D"]),
            "-" if row["alpha"] is None else str(row["alpha"]),
            "-" if row["step_a_ms"] is None else str(row["step_a_ms"]),
            "-" if row["step_b_ms"] is None else str(row["step_b_ms"]),
            ocell,
        ])
    widths = [max(len(c[i]) for c in cells if i < len(c) and len(c) == len(head))
              for i in range(len(head))]
    lines = []
    for c in cells:
        if len(c) == len(head):
            lines.append("  ".join(s.ljust(w) for s, w in zip(c, widths)).rstrip())
        else:
            lines.append("  ".join(c))
    return "\n".join(lines)


def run_bench(config: CliConfig, primes, out=None, err=None) -> int:
    """Run :func:`bench` and print the table; exit 1 if any row failed."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    status, rows = _guard(lambda: bench(config, primes), err)
    if status:
        return status
    if config.format == "json":
        print(json.dumps(rows, indent=2), file=out)
    else:
        print(_format_table(rows), file=out)
    return 1 if any(r["error"] for r in rows) else 0


# --------------------------------------------------------------------------
# argument parsing


def _csv(text):
    return [s.strip() for s in text.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="frobcoh",
        description="Frobenius action on H^q(X, O_X) for a projective variety over F_p.")
    ap.add_argument("--input", required=True, help="problem file (key = value lines)")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--algorithm", choices=tuple(_ALGORITHM_FLAGS), default=None,
                    help="override the algorithm named in the file")
    ap.add_argument("--dump", default="", metavar="LIST",
                    help="comma-separated subset of: resolution,lifts,basis")
    ap.add_argument("--bench", default=None, metavar="P1,P2,...",
                    help="run the file once per prime and print a table")
    ap.add_argument("--timing", action="store_true",
                    help="report Step A / Step B wall-clock times")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        config = CliConfig(args.input, args.format, args.algorithm,
                           frozenset(_csv(args.dump)), args.timing)
        primes = None
        if args.bench is not None:
            try:
                primes = [int(s) for s in _csv(args.bench)]
            except ValueError:
                raise UsageError(f"--bench expects integers, got {args.bench!r}") from None
    except UsageError as exc:
        print(f"frobcoh: error: {exc}", file=sys.stderr)
        return 1
    if primes is not None:
        return run_bench(config, primes)
    return run(config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
