"""Command-line front end: point classification, mu computation, suite
execution, counterexample reproduction, and 2-D slice grids.

Exit codes are a stable contract:

    0   Interior (or: command succeeded)
    1   ClosureBoundary
    2   Outside
    3   verification suite reported failures
    64  parse / dimension / usage errors
    65  unknown structure name
    66  unknown suite name
    70  internal fault (criteria disagreement or similar; traceback on stderr)

Complex literals are accepted as "a+bi" text (the trailing ``i`` or ``j``
marks the imaginary part) and as ``{"re": .., "im": ..}`` objects inside
JSON documents; all output is structured JSON / delimited text, with complex
values always rendered as ``{"re", "im"}`` pairs so that printed points
re-parse to the identical verdict.

The environment variable ``MUBLOCKS_TOL`` supplies the default tolerance
wherever ``--tol`` is omitted.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import os
import sys
import traceback
from typing import Optional, Sequence

from .bidisc import g2_classify
from .domain_f import f_classify
from .errors import PreconditionViolation, UnknownSuite
from .hexablock import hexa_classify, hn_classify
from .lie_ball import lie_ball_classify
from .matrix2 import Matrix2
from .mu import mu_value, structure_from_name
from .pentablock import penta_classify
from .tetrablock import tetra_classify
from .verdict import Region
from .verify import DEFAULT_R_GRID, run_all, run_counterexamples, run_suite, suite_names

_ENV_TOL = "MUBLOCKS_TOL"

_DOMAINS = ("g2", "tetra", "penta", "f", "h", "hn", "l4")

_COORD_NAMES = {
    "g2": ("s", "p"),
    "tetra": ("x1", "x2", "x3"),
    "penta": ("a", "s", "p"),
    "f": ("x", "a", "p", "s"),
    "h": ("a", "x1", "x2", "x3"),
    "hn": ("a", "x1", "x2", "x3"),
    "l4": ("z1", "z2", "z3", "z4"),
}

_REGION_CODE = {
    Region.INTERIOR: 0,
    Region.CLOSURE_BOUNDARY: 1,
    Region.OUTSIDE: 2,
}

_INDETERMINATE_CODE = 9


class _CliError(Exception):
    """Usage-level failure carrying its exit code."""

    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract wants 64."""

    def error(self, message: str):  # noqa: A003 - argparse API
        raise _CliError(64, f"{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# input parsing


def _normalize_ascii(text: str) -> str:
    # Tolerate unicode minus signs pasted from formatted documents.
    return text.replace("−", "-")


def _parse_complex_text(text: str) -> complex:
    t = _normalize_ascii(text).strip().replace(" ", "")
    if not t:
        raise _CliError(64, "empty complex literal")
    t = t.replace("I", "i").replace("J", "j").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise _CliError(64, f"cannot parse complex literal {text!r}") from None


def _coerce_scalar(obj) -> complex:
    if isinstance(obj, bool):
        raise _CliError(64, f"boolean is not a coordinate: {obj!r}")
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, complex):
        return obj
    if isinstance(obj, str):
        return _parse_complex_text(obj)
    if isinstance(obj, dict):
        if not obj or not set(obj) <= {"re", "im"}:
            raise _CliError(64, f"complex object must have keys re/im: {obj!r}")
        re_part, im_part = obj.get("re", 0), obj.get("im", 0)
        if isinstance(re_part, bool) or isinstance(im_part, bool) or \
                not isinstance(re_part, (int, float)) or not isinstance(im_part, (int, float)):
            raise _CliError(64, f"re/im must be numbers: {obj!r}")
        return complex(float(re_part), float(im_part))
    raise _CliError(64, f"cannot interpret {obj!r} as a complex number")


def _parse_literal(text: str):
    """JSON first (handles {re, im} objects), then a python-style fallback
    where a trailing i marks the imaginary unit."""
    t = _normalize_ascii(text).strip()
    try:
        return json.loads(t)
    except ValueError:
        pass
    cooked = t.replace("I", "i").replace("J", "j").replace("i", "j")
    try:
        return ast.literal_eval(cooked)
    except (ValueError, SyntaxError, TypeError, MemoryError, RecursionError):
        raise _CliError(64, f"cannot parse {text!r}") from None


def parse_point(text: str, domain: str) -> tuple[complex, ...]:
    obj = _parse_literal(text)
    if isinstance(obj, dict):
        if "coords" not in obj:
            raise _CliError(64, f"point object needs a 'coords' field: {text!r}")
        declared = obj.get("domain")
        if declared is not None and declared != domain:
            raise _CliError(
                64, f"point document is for domain {declared!r}, not {domain!r}")
        obj = obj["coords"]
    if not isinstance(obj, (list, tuple)):
        raise _CliError(64, f"point must be a sequence of coordinates: {text!r}")
    coords = tuple(_coerce_scalar(v) for v in obj)
    want = len(_COORD_NAMES[domain])
    if len(coords) != want:
        raise _CliError(
            64, f"domain {domain!r} takes {want} coordinates, got {len(coords)}")
    return coords


def parse_matrix(text: str) -> Matrix2:
    obj = _parse_literal(text)
    if not (isinstance(obj, (list, tuple)) and len(obj) == 2
            and all(isinstance(r, (list, tuple)) and len(r) == 2 for r in obj)):
        raise _CliError(64, f"matrix must be 2x2 ([[a,b],[c,d]]): {text!r}")
    (a, b), (c, d) = obj
    return Matrix2(_coerce_scalar(a), _coerce_scalar(b),
                   _coerce_scalar(c), _coerce_scalar(d))


def _resolve_tol(args) -> Optional[float]:
    tol = getattr(args, "tol", None)
    if tol is None:
        raw = os.environ.get(_ENV_TOL)
        if raw is None:
            return None
        try:
            tol = float(raw)
        except ValueError:
            raise _CliError(64, f"{_ENV_TOL}={raw!r} is not a number") from None
    if not (tol > 0.0) or not math.isfinite(tol):
        raise _CliError(64, f"tolerance must be finite and positive, got {tol!r}")
    return tol


# ---------------------------------------------------------------------------
# output formatting


def _c_doc(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _point_doc(coords: Sequence[complex]) -> list:
    return [_c_doc(z) for z in coords]


def _matrix_doc(m: Optional[Matrix2]) -> Optional[list]:
    if m is None:
        return None
    return [[_c_doc(m.a11), _c_doc(m.a12)], [_c_doc(m.a21), _c_doc(m.a22)]]


# ---------------------------------------------------------------------------
# classification plumbing

_CLASSIFIERS = {
    "g2": g2_classify,
    "tetra": tetra_classify,
    "penta": penta_classify,
    "f": f_classify,
    "h": hexa_classify,
    "l4": lie_ball_classify,
}


def _hn_region(rec) -> str:
    # The normed variant is not open, so Interior is reserved for the
    # interior of the set itself; members outside that interior report
    # ClosureBoundary even when they sit inside the ambient hexablock.
    if rec.in_interior_of_hn:
        return "Interior"
    if rec.in_closure:
        return "ClosureBoundary"
    return "Outside"


def _classify_cell(domain: str, coords: Sequence[complex],
                   tol: Optional[float]) -> tuple[int, float, dict]:
    """(verdict code, margin, extra JSON fields) for one point."""
    kw = {} if tol is None else {"tol": tol}
    if domain == "hn":
        rec = hn_classify(coords, **kw)
        region = _hn_region(rec)
        code = {"Interior": 0, "ClosureBoundary": 1, "Outside": 2}[region]
        extra = {
            "region": region,
            "in_open": rec.in_open,
            "in_closure": rec.in_closure,
            "in_interior_of_hn": rec.in_interior_of_hn,
            "margin": None,
            "shilov": None,
            "indeterminate": False,
        }
        return code, float("nan"), extra
    verdict = _CLASSIFIERS[domain](coords, **kw)
    code = (_INDETERMINATE_CODE if verdict.indeterminate
            else _REGION_CODE[verdict.region])
    extra = {
        "region": verdict.region.value,
        "margin": verdict.margin,
        "tol": verdict.tol,
        "shilov": verdict.shilov,
        "indeterminate": verdict.indeterminate,
    }
    return code, verdict.margin, extra


def _merge_positional(pos, opt, what: str) -> str:
    if opt is not None:
        return opt
    if pos is not None:
        return pos
    raise _CliError(64, f"missing {what} (give it positionally or via --{what})")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    domain = _merge_positional(args.domain_pos, args.domain, "domain")
    if domain not in _COORD_NAMES:
        raise _CliError(64, f"unknown domain {domain!r}; choose from {_DOMAINS}")
    point_text = _merge_positional(args.point_pos, args.point, "point")
    coords = parse_point(point_text, domain)
    tol = _resolve_tol(args)
    code, _margin, extra = _classify_cell(domain, coords, tol)
    doc = {"domain": domain, "point": _point_doc(coords)}
    doc.update(extra)
    print(json.dumps(doc))
    if code == _INDETERMINATE_CODE:
        # An indeterminate hexablock verdict is still a boundary-band call.
        return 1
    return code


def _cmd_mu(args) -> int:
    name = _merge_positional(args.structure_pos, args.structure, "structure")
    matrix_text = _merge_positional(args.matrix_pos, args.matrix, "matrix")
    a = parse_matrix(matrix_text)
    try:
        structure = structure_from_name(name)
    except UnknownSuite:
        raise
    except KeyError as exc:
        raise _CliError(65, f"unknown structure: {exc.args[0]}") from None
    tol = _resolve_tol(args)
    kw = {} if tol is None else {"tol": tol}
    result = mu_value(a, structure, **kw)
    doc = {
        "structure": structure.name,
        "matrix": _matrix_doc(a),
        "value": result.value,
        "status": result.status,
        "minimizer": _matrix_doc(result.minimizer),
    }
    print(json.dumps(doc))
    return 0


def _cmd_verify(args) -> int:
    suite = _merge_positional(args.suite_pos, args.suite, "suite")
    seed = 7 if args.seed is None else args.seed
    tol = _resolve_tol(args)
    r_grid = tuple(args.r) if args.r else DEFAULT_R_GRID
    if suite == "all":
        if args.n is not None:
            raise _CliError(64, "--n applies to single suites, not 'all'")
        reports = run_all(seed=seed, r_grid=r_grid)
    elif suite == "counterexamples":
        reports = [run_counterexamples(r_grid)]
    else:
        if args.r:
            raise _CliError(64, "--r only applies to the counterexample grid")
        reports = [run_suite(suite, n_samples=args.n, seed=seed, tol=tol)]
    for report in reports:
        print("\n".join(report.to_lines()))
    total = sum(len(r.failures) for r in reports)
    status = "pass" if total == 0 else "FAIL"
    print(f"total: suites={len(reports)} failures={total} status={status}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
            fh.write("\n")
    return 0 if total == 0 else 3


_AXIS_RE_HELP = "axis spec like 'Re(p),Im(s)' (two comma-separated components)"


def _parse_fixed(text: Optional[str], names: Sequence[str]) -> dict:
    fixed: dict = {}
    if not text:
        return fixed
    for part in _normalize_ascii(text).split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise _CliError(64, f"--fixed entries look like name=value, got {part!r}")
        key, _, raw = part.partition("=")
        key = key.strip()
        if key not in names:
            raise _CliError(64, f"unknown coordinate {key!r}; domain has {tuple(names)}")
        if key in fixed:
            raise _CliError(64, f"coordinate {key!r} fixed twice")
        fixed[key] = _parse_complex_text(raw)
    return fixed


def _parse_axes(text: Optional[str], names: Sequence[str],
                fixed: dict) -> list[tuple[str, str]]:
    if text is None:
        free = [nm for nm in names if nm not in fixed]
        if len(free) < 2:
            raise _CliError(64, "need at least two unfixed coordinates for a slice")
        return [("re", free[0]), ("re", free[1])]
    tokens = [t.strip() for t in
              _normalize_ascii(text).replace("×", ",").split(",") if t.strip()]
    if len(tokens) != 2:
        raise _CliError(64, f"exactly two axes required ({_AXIS_RE_HELP})")
    axes: list[tuple[str, str]] = []
    for token in tokens:
        low = token.lower()
        if low.startswith("re(") and low.endswith(")"):
            comp, nm = "re", token[3:-1].strip()
        elif low.startswith("im(") and low.endswith(")"):
            comp, nm = "im", token[3:-1].strip()
        else:
            raise _CliError(64, f"bad axis {token!r} ({_AXIS_RE_HELP})")
        if nm not in names:
            raise _CliError(64, f"unknown coordinate {nm!r}; domain has {tuple(names)}")
        if nm in fixed:
            raise _CliError(64, f"coordinate {nm!r} is fixed and cannot be an axis")
        axes.append((comp, nm))
    if axes[0] == axes[1]:
        raise _CliError(64, "the two axes must differ")
    return axes


def _parse_range(text: Optional[str]) -> tuple[tuple[float, float], tuple[float, float]]:
    if text is None:
        return ((-1.5, 1.5), (-1.5, 1.5))
    spans = []
    for part in _normalize_ascii(text).split(","):
        lo_txt, sep, hi_txt = part.strip().partition(":")
        if not sep:
            raise _CliError(64, f"range entries look like lo:hi, got {part!r}")
        try:
            lo, hi = float(lo_txt), float(hi_txt)
        except ValueError:
            raise _CliError(64, f"bad range bounds in {part!r}") from None
        if not (lo < hi) or not math.isfinite(lo) or not math.isfinite(hi):
            raise _CliError(64, f"range needs finite lo < hi, got {part!r}")
        spans.append((lo, hi))
    if len(spans) == 1:
        return (spans[0], spans[0])
    if len(spans) == 2:
        return (spans[0], spans[1])
    raise _CliError(64, "--range takes 'lo:hi' or 'lo:hi,lo:hi'")


def _axis_label(axis: tuple[str, str]) -> str:
    comp, nm = axis
    return f"{comp.capitalize()}({nm})"


def _cmd_slice(args) -> int:
    domain = _merge_positional(args.domain_pos, args.domain, "domain")
    if domain not in _COORD_NAMES:
        raise _CliError(64, f"unknown domain {domain!r}; choose from {_DOMAINS}")
    names = _COORD_NAMES[domain]
    fixed = _parse_fixed(args.fixed, names)
    axes = _parse_axes(args.axes, names, fixed)
    (lo1, hi1), (lo2, hi2) = _parse_range(args.range)
    n = args.grid
    if n < 2:
        raise _CliError(64, f"--grid needs at least 2 points per axis, got {n}")
    tol = _resolve_tol(args)

    base = [fixed.get(nm, 0j) for nm in names]
    idx = {nm: k for k, nm in enumerate(names)}
    lines = [f"{_axis_label(axes[0])}\t{_axis_label(axes[1])}\tcode\tmargin"]
    for i in range(n):
        v1 = lo1 + (hi1 - lo1) * i / (n - 1)
        for j in range(n):
            v2 = lo2 + (hi2 - lo2) * j / (n - 1)
            coords = list(base)
            for (comp, nm), val in zip(axes, (v1, v2)):
                z = coords[idx[nm]]
                coords[idx[nm]] = complex(val, z.imag) if comp == "re" \
                    else complex(z.real, val)
            code, margin, _extra = _classify_cell(domain, tuple(coords), tol)
            lines.append(f"{v1:.10g}\t{v2:.10g}\t{code}\t{margin:.17g}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="mublocks",
        description="Membership tests, mu values, verification suites, and "
                    "slice grids for the mublocks domain family.",
        epilog="Exit codes: 0 Interior/success, 1 ClosureBoundary, 2 Outside, "
               "3 suite failures, 64 usage, 65 unknown structure, "
               "66 unknown suite, 70 internal fault.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_check = sub.add_parser(
        "check", help="classify a point against a domain",
        description="Classify a point; prints a JSON verdict with region, "
                    "margin, and shilov flag.")
    p_check.add_argument("domain_pos", nargs="?", metavar="domain",
                         help=f"one of {', '.join(_DOMAINS)}")
    p_check.add_argument("point_pos", nargs="?", metavar="point",
                         help="e.g. \"(0,0,0.25,0)\" or JSON with {re,im} pairs")
    p_check.add_argument("--domain", help="domain name (alternative to positional)")
    p_check.add_argument("--point", help="point literal (alternative to positional)")
    p_check.add_argument("--tol", type=float, help="classification tolerance")
    p_check.set_defaults(func=_cmd_check)

    p_mu = sub.add_parser(
        "mu", help="structured singular value of a 2x2 matrix",
        description="Compute mu for a matrix relative to a named structure; "
                    "prints value, status, and minimizer.")
    p_mu.add_argument("structure_pos", nargs="?", metavar="structure",
                      help="scalar, diag, upper, lower, full, skewdiag, "
                           "or e_theta:<angle>")
    p_mu.add_argument("matrix_pos", nargs="?", metavar="matrix",
                      help="e.g. \"[[0,1],[0,0]]\"")
    p_mu.add_argument("--structure", help="structure name")
    p_mu.add_argument("--matrix", help="matrix literal")
    p_mu.add_argument("--tol", type=float, help="residual tolerance")
    p_mu.set_defaults(func=_cmd_mu)

    p_verify = sub.add_parser(
        "verify", help="run a verification suite (or 'all')",
        description="Run one registered suite, the counterexample grid, or "
                    "everything; exits 3 when any failure is recorded. "
                    f"Suites: all, counterexamples, {', '.join(suite_names())}.")
    p_verify.add_argument("suite_pos", nargs="?", metavar="suite")
    p_verify.add_argument("--suite", help="suite name")
    p_verify.add_argument("--n", type=int, help="sample count override")
    p_verify.add_argument("--seed", type=int, help="RNG seed (default 7)")
    p_verify.add_argument("--tol", type=float, help="tolerance override")
    p_verify.add_argument("--r", action="append", type=float, metavar="R",
                          help="counterexample radius (repeatable)")
    p_verify.add_argument("--out", help="also write a JSON aggregate here")
    p_verify.set_defaults(func=_cmd_verify)

    p_slice = sub.add_parser(
        "slice", help="rasterize a 2-D slice of a domain",
        description="Tab-separated grid: header row with axis names, then "
                    "rows of axis1 value, axis2 value, verdict code "
                    "(0 Interior, 1 ClosureBoundary, 2 Outside, "
                    "9 indeterminate band), margin.")
    p_slice.add_argument("domain_pos", nargs="?", metavar="domain")
    p_slice.add_argument("--domain", help="domain name")
    p_slice.add_argument("--fixed", help="comma list of name=value, e.g. x=0,a=0")
    p_slice.add_argument("--axes", help=_AXIS_RE_HELP +
                         " (default: real parts of the first two unfixed coordinates)")
    p_slice.add_argument("--range", help="lo:hi or lo:hi,lo:hi (default -1.5:1.5)")
    p_slice.add_argument("--grid", type=int, default=200,
                         help="points per axis (default 200)")
    p_slice.add_argument("--tol", type=float, help="classification tolerance")
    p_slice.add_argument("--out", help="write the grid to this file")
    p_slice.set_defaults(func=_cmd_slice)

    return parser


_VALUE_FLAGS = frozenset({
    "--range", "--fixed", "--axes", "--point", "--matrix", "--tol", "--r",
})


def _preprocess_argv(argv: Sequence[str]) -> list[str]:
    """Join value flags with '=' so arguments like '--range -1.5:1.5' are not
    mistaken for options by argparse."""
    out: list[str] = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-") \
                and not argv[k + 1].startswith("--"):
            out.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = parser.parse_args(_preprocess_argv(raw))
    except _CliError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 64
    try:
        return args.func(args)
    except _CliError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except UnknownSuite as exc:
        # Must precede KeyError: UnknownSuite subclasses it.
        print(f"unknown suite: {exc.args[0]}", file=sys.stderr)
        return 66
    except PreconditionViolation as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 64
    except BrokenPipeError:
        return 0
    except Exception:  # pragma: no cover - contract: never leak exit 1
        traceback.print_exc()
        return 70


if __name__ == "__main__":
    sys.exit(main())
