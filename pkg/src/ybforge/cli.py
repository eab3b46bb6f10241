"""Command-line interface.

Every subcommand produces a report: a list of named checks, each with a
boolean verdict and optional certification flag, witness, and notes.  Exit
status is 0 when every verdict in the report is true, 1 when at least one
is false, and 2 on bad input (parse errors, unknown names, violated
preconditions, undersized grids).  Informational values that should not
flip the exit status are carried in notes, not verdicts.
"""
import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .constructions import (colored_qybe_verify, jordan_r_restricted,
                            matrix_form8, oneparam_verify, phi_super,
                            r_algebra, r_colored, r_super_colored,
                            thm32_predict, wxz_thm38)
from .exactla import mat_inverse, rat_from_str, rat_to_str
from .paramgrid import GridConfigError, default_grid, degree_bounds
from .structures import (AlgebraSpec, CoalgebraSpec, ColorLieSpec,
                         MissingUnitError, PreconditionError, SuperLieSpec,
                         check_algebra_props, coalgebra_props, dualize,
                         dualize_co, jordan_co_check, jordan_w_check,
                         structure_from_json, structure_to_json,
                         validate_colorlie, validate_superlie)
from .ybcore import (braid_check, braid_qybe_equiv, braid_witness,
                     is_yb_operator, linop2_from_json, linop2_to_json,
                     qybe_check, qybe_witness, wxz_check)
from . import registry


class CliInputError(Exception):
    """Bad command-line input; maps to exit status 2."""


@dataclass
class Check:
    name: str
    verdict: bool
    certified: bool = None
    witness: object = None
    notes: str = ""


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    # set when the command's payload occupies stdout, so the report must not
    to_stderr: bool = False

    def add(self, name, verdict, certified=None, witness=None, notes=""):
        self.checks.append(Check(name, bool(verdict), certified, witness, notes))

    def note(self, text):
        self.notes.append(text)

    def exit_status(self):
        return 0 if all(c.verdict for c in self.checks) else 1


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return rat_to_str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def emit_report(report, as_json, stream=None):
    stream = stream or sys.stdout
    if as_json:
        payload = {
            "version": __version__,
            "command": report.command,
            "checks": [
                {
                    "name": c.name,
                    "verdict": c.verdict,
                    "certified": c.certified,
                    "witness": _jsonable(c.witness),
                    "notes": c.notes,
                }
                for c in report.checks
            ],
            "notes": report.notes,
            "exit": report.exit_status(),
        }
        stream.write(json.dumps(payload, indent=2) + "\n")
        return
    stream.write("ybforge %s: %s\n" % (__version__, report.command))
    for c in report.checks:
        tag = "PASS" if c.verdict else "FAIL"
        line = "  [%s] %s" % (tag, c.name)
        if c.certified is not None:
            line += " (certified)" if c.certified else " (not certified)"
        if c.notes:
            line += "  -- " + c.notes
        stream.write(line + "\n")
        if c.witness is not None:
            stream.write("         witness: %s\n" % (_jsonable(c.witness),))
    for text in report.notes:
        stream.write("  note: %s\n" % text)


def _cert_note(res):
    parts = ["%s: %d points, degree bound %d" % (name, got, bound)
             for name, (got, bound) in sorted(res.certificate.items())]
    return "; ".join(parts)


def _rat(text, what):
    try:
        return rat_from_str(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliInputError("bad %s value %r: %s" % (what, text, exc))


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="ascii") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliInputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise CliInputError("invalid JSON in %s: %s" % (path, exc))


def _write_json(doc, path, report=None):
    text = json.dumps(doc, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
        if report is not None:
            report.to_stderr = True
        return
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def load_structure(source):
    """A registry name (with optional inline args) or a JSON file path."""
    if source in registry.names() or (
            "(" in source and source.split("(", 1)[0] in registry.names()):
        try:
            return registry.build(source)
        except (KeyError, ValueError) as exc:
            raise CliInputError("bad registry reference %r: %s" % (source, exc))
    if not os.path.exists(source):
        raise CliInputError(
            "%r is neither a registry name (%s) nor a file"
            % (source, ", ".join(registry.names())))
    try:
        return structure_from_json(_load_json(source))
    except (KeyError, ValueError) as exc:
        raise CliInputError("bad structure file %s: %s" % (source, exc))


def _require_kind(obj, kind, what):
    if not isinstance(obj, kind):
        raise CliInputError("%s: expected %s, got %s"
                            % (what, kind.__name__, type(obj).__name__))
    return obj


def _grid_points(arg_value, tag, var, nonzero=False):
    """Resolve grid size from --grid, then YBFORGE_GRID, then the bound."""
    bound = degree_bounds(tag)[var]
    size = None
    if arg_value is not None:
        size = arg_value
    else:
        env = os.environ.get("YBFORGE_GRID")
        if env:
            try:
                size = int(env)
            except ValueError:
                raise CliInputError("YBFORGE_GRID must be an integer, got %r" % env)
    if size is None:
        size = bound + 1
    if size < bound + 1:
        raise CliInputError(
            "grid size %d is below the certification bound %d for %s"
            % (size, bound + 1, tag))
    return default_grid(size, nonzero=nonzero)


# --- algebra-check -------------------------------------------------------

_PROP_NAMES = {
    "algebra": ("commutative", "associative", "unital", "jordan"),
    "coalgebra": ("cocommutative", "coassociative", "counital", "jordan"),
    "superlie": ("antisymmetric", "jacobi"),
    "colorlie": ("antisymmetric", "jacobi"),
}


def cmd_algebra_check(args):
    report = Report("algebra-check %s" % args.source)
    obj = load_structure(args.source)
    props = {}
    if isinstance(obj, AlgebraSpec):
        p = check_algebra_props(obj)
        props = {"commutative": p.commutative, "associative": p.associative,
                 "unital": p.unital, "jordan": p.jordan}
        report.note("kind=algebra dim=%d" % obj.n)
        for name, value in props.items():
            report.note("%s=%s" % (name, str(value).lower()))
        if p.commutative:
            mode = args.jordan_mode
            ok = jordan_w_check(obj, mode=mode)
            props["jordan-w"] = ok
            report.add("jordan-w[%s]" % mode, ok)
        else:
            report.note("jordan-w skipped: product is not commutative")
    elif isinstance(obj, CoalgebraSpec):
        p = coalgebra_props(obj)
        props = {"cocommutative": p.cocommutative,
                 "coassociative": p.coassociative}
        report.note("kind=coalgebra dim=%d" % obj.n)
        for name, value in props.items():
            report.note("%s=%s" % (name, str(value).lower()))
        if p.cocommutative:
            ok = jordan_co_check(obj, mode=args.jordan_mode)
            props["jordan-co"] = ok
            report.add("jordan-co[%s]" % args.jordan_mode, ok)
        else:
            report.note("jordan-co skipped: coproduct is not cocommutative")
    elif isinstance(obj, SuperLieSpec):
        rep = validate_superlie(obj)
        props = {"antisymmetric": rep.antisym, "jacobi": rep.jacobi}
        report.note("kind=superlie dim=%d" % obj.n)
        report.add("antisymmetric", rep.antisym)
        report.add("jacobi", rep.jacobi)
    elif isinstance(obj, ColorLieSpec):
        rep = validate_colorlie(obj)
        props = {"bicharacter": rep.bicharacter,
                 "antisymmetric": rep.antisym, "jacobi": rep.jacobi}
        report.note("kind=colorlie dim=%d" % obj.n)
        report.add("bicharacter", rep.bicharacter)
        report.add("antisymmetric", rep.antisym)
        report.add("jacobi", rep.jacobi)
    else:
        raise CliInputError("unsupported structure kind")
    if args.expect:
        for want in args.expect.split(","):
            want = want.strip()
            if want not in props:
                raise CliInputError(
                    "unknown property %r; available: %s"
                    % (want, ", ".join(sorted(props))))
            report.add("expect:%s" % want, props[want])
    return report


# --- examples ------------------------------------------------------------

def cmd_examples(args):
    report = Report("examples %s" % args.action)
    if args.action == "list":
        if args.json:
            _write_json({"names": registry.names()}, None)
        else:
            for name in registry.names():
                sys.stdout.write(name + "\n")
        return report
    # emit
    if args.name is None:
        raise CliInputError("examples emit requires a name")
    extras = []
    for flag in ("m", "s", "t", "beta"):
        value = getattr(args, flag)
        if value is not None:
            extras.append(rat_to_str(_rat(value, flag)))
    source = args.name if not extras else "%s(%s)" % (args.name, ",".join(extras))
    obj = load_structure(source)
    _write_json(structure_to_json(obj), args.output, report)
    report.add("emit:%s" % source, True)
    return report


# --- ybe build / verify --------------------------------------------------

def _load_operator(path):
    doc = _load_json(path)
    try:
        return linop2_from_json(doc)
    except (KeyError, ValueError) as exc:
        raise CliInputError("bad operator JSON: %s" % exc)


def cmd_ybe_build(args):
    report = Report("ybe build rA")
    alg = _require_kind(load_structure(args.algebra), AlgebraSpec, "--algebra")
    a, b, g = (_rat(args.alpha, "alpha"), _rat(args.beta, "beta"),
               _rat(args.gamma, "gamma"))
    try:
        op = r_algebra(alg, a, b, g)
    except MissingUnitError as exc:
        raise CliInputError(str(exc))
    predicted = thm32_predict(a, b, g)
    report.note("predicted yang-baxter: %s" % str(predicted).lower())
    _write_json(linop2_to_json(op), args.output, report)
    return report


def cmd_ybe_verify(args):
    report = Report("ybe verify")
    op = _load_operator(args.operator)
    wanted = [name for name in ("braid", "qybe", "invertible", "equivalence")
              if getattr(args, name)]
    if not wanted:
        wanted = ["braid", "invertible", "equivalence"]
    for name in wanted:
        if name == "braid":
            ok = braid_check(op)
            report.add("braid", ok, witness=None if ok else braid_witness(op))
        elif name == "qybe":
            ok = qybe_check(op)
            report.add("qybe", ok, witness=None if ok else qybe_witness(op))
        elif name == "invertible":
            report.add("invertible", mat_inverse(op.mat) is not None)
        else:
            report.add("braid-qybe-equivalence", braid_qybe_equiv(op))
    return report


def cmd_ybe_colored(args):
    report = Report("ybe colored")
    alg = _require_kind(load_structure(args.algebra), AlgebraSpec, "--algebra")
    p, q = _rat(args.p, "p"), _rat(args.q, "q")
    try:
        family = r_colored(alg, p, q)
    except MissingUnitError as exc:
        raise CliInputError(str(exc))
    grid = _grid_points(args.grid, "colored", "u")
    res = colored_qybe_verify(family, grid)
    report.add("colored-qybe", res.verdict, certified=res.certified,
               witness=res.witness, notes=_cert_note(res))
    return report


def cmd_ybe_oneparam(args):
    report = Report("ybe oneparam")
    alg = _require_kind(load_structure(args.algebra), AlgebraSpec, "--algebra")
    q = _rat(args.q, "q")
    grid = _grid_points(args.grid, "oneparam", "t1", nonzero=True)
    try:
        res = oneparam_verify(alg, q, grid)
    except (MissingUnitError, ValueError) as exc:
        raise CliInputError(str(exc))
    report.add("oneparam-ybe", res.verdict, certified=res.certified,
               witness=res.witness, notes=_cert_note(res))
    return report


def cmd_ybe_wxz38(args):
    report = Report("ybe wxz38")
    alg = _require_kind(load_structure(args.algebra), AlgebraSpec, "--algebra")
    lam, mu = _rat(args.lam, "lambda"), _rat(args.mu, "mu")
    try:
        w, x, z = wxz_thm38(alg, lam, mu)
    except MissingUnitError as exc:
        raise CliInputError(str(exc))
    rep = wxz_check(w, x, z)
    report.add("[W,W,W]=0", rep.www)
    report.add("[Z,Z,Z]=0", rep.zzz)
    report.add("[W,X,X]=0", rep.wxx)
    report.add("[X,X,Z]=0", rep.xxz)
    return report


def cmd_ybe_phi(args):
    report = Report("ybe phi")
    lie = _require_kind(load_structure(args.lie), SuperLieSpec, "--lie")
    z = _default_z(args)
    alpha = _rat(args.alpha, "alpha")
    try:
        pair = phi_super(lie, z, alpha)
    except PreconditionError as exc:
        raise CliInputError(str(exc))
    yb = is_yb_operator(pair.op)
    report.add("braid", yb.braid)
    report.add("invertible", yb.invertible)
    report.add("yang-baxter", yb.yb)
    report.add("inverse-formula", True,
               notes="closed-form inverse composes to the identity")
    if args.output:
        _write_json(linop2_to_json(pair.op), args.output, report)
    return report


def _default_z(args):
    if args.z is not None:
        return [_rat(part, "z") for part in args.z.split(",")]
    name = args.lie.split("(", 1)[0]
    if name in registry.DEFAULT_Z:
        return [Fraction(v) for v in registry.DEFAULT_Z[name]]
    raise CliInputError("--z is required for %r" % args.lie)


def _parse_table(text, what):
    table = {}
    try:
        for piece in text.split(","):
            key, value = piece.split("=", 1)
            table[Fraction(key.strip())] = rat_from_str(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CliInputError("bad %s %r: %s" % (what, text, exc))
    if not table:
        raise CliInputError("%s is empty" % what)
    return table


def cmd_ybe_super_colored(args):
    report = Report("ybe super-colored")
    lie = _require_kind(load_structure(args.lie), SuperLieSpec, "--lie")
    z = _default_z(args)
    alpha_table = _parse_table(args.alpha_table, "alpha table")
    beta_table = _parse_table(args.beta_table, "beta table")
    if args.colors is not None:
        colors = [Fraction(part) for part in args.colors.split(",")]
    else:
        colors = sorted(alpha_table)
    try:
        family = r_super_colored(lie, z, alpha_table, beta_table, colors)
        res = colored_qybe_verify(family, colors)
    except (PreconditionError, ValueError) as exc:
        raise CliInputError(str(exc))
    except KeyError as exc:
        raise CliInputError("color missing from a table: %s" % exc)
    report.add("colored-qybe", res.verdict, certified=res.certified,
               witness=res.witness, notes=_cert_note(res))
    report.note("operator depends on the first color only, as constructed")
    return report


def cmd_ybe_jordan_restricted(args):
    report = Report("ybe jordan-restricted")
    alg = _require_kind(load_structure(args.algebra), AlgebraSpec, "--algebra")
    a, b, g = (_rat(args.alpha, "alpha"), _rat(args.beta, "beta"),
               _rat(args.gamma, "gamma"))
    try:
        res = jordan_r_restricted(alg, a, b, g)
    except PreconditionError as exc:
        raise CliInputError(str(exc))
    report.add("restricted-braid", res.restricted)
    report.note("full braid relation: %s" % str(res.full).lower())
    report.note("unit adjoined: %s" % str(res.unit_adjoined).lower())
    report.note("restricted family size: %d" % res.family_size)
    return report


def cmd_ybe_form8(args):
    report = Report("ybe form8")
    alg = _require_kind(load_structure(args.algebra), AlgebraSpec, "--algebra")
    a, b = _rat(args.alpha, "alpha"), _rat(args.beta, "beta")
    try:
        res = matrix_form8(alg, a, b)
    except (MissingUnitError, PreconditionError, ValueError) as exc:
        raise CliInputError(str(exc))
    if res.matched:
        notes = "q=%s eta=%s" % (rat_to_str(res.q8), rat_to_str(res.eta8))
        witness = None
    else:
        notes = "display does not fit the template"
        witness = {"entry": list(res.offending), "value": rat_to_str(res.value)}
    report.add("matches-8x8-template", res.matched, witness=witness, notes=notes)
    return report


# --- dualize -------------------------------------------------------------

def cmd_dualize(args):
    report = Report("dualize %s" % args.source)
    obj = load_structure(args.source)
    if isinstance(obj, AlgebraSpec):
        out = dualize(obj)
        report.note("algebra -> coalgebra, dim=%d" % obj.n)
    elif isinstance(obj, CoalgebraSpec):
        out = dualize_co(obj)
        report.note("coalgebra -> algebra, dim=%d" % obj.n)
    else:
        raise CliInputError("dualize expects an algebra or coalgebra")
    _write_json(structure_to_json(out), args.output, report)
    report.add("dualize", True)
    return report


# --- bench ---------------------------------------------------------------

def cmd_bench(args):
    from . import bench
    report = Report("bench")
    bench.run(size=args.size, reps=args.reps, chain=args.chain)
    return report


# --- parser --------------------------------------------------------------

def _add_json(parser):
    parser.add_argument("--json", action="store_true",
                        help="emit the report as JSON")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ybforge",
        description="exact verification of Yang-Baxter operator families "
                    "and Jordan (co)algebra structures")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra-check",
                       help="validate a structure and report its properties")
    p.add_argument("source", help="registry name or JSON file")
    p.add_argument("--jordan-mode", default="pattern3",
                   choices=("pattern3", "full", "symmetrized"))
    p.add_argument("--expect", default=None,
                   help="comma list of properties that must hold")
    _add_json(p)
    p.set_defaults(func=cmd_algebra_check)

    p = sub.add_parser("examples", help="list or emit built-in structures")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--m", default=None, help="parameter for split2")
    p.add_argument("--s", default=None, help="first parameter for t21")
    p.add_argument("--t", default=None, help="second parameter for t21")
    p.add_argument("--beta", default=None, help="parameter for theorem22")
    p.add_argument("-o", "--output", default=None)
    _add_json(p)
    p.set_defaults(func=cmd_examples)

    ybe = sub.add_parser("ybe", help="build and verify Yang-Baxter operators")
    ysub = ybe.add_subparsers(dest="ybe_command", required=True)

    p = ysub.add_parser("build", help="build the three-coefficient operator")
    p.add_argument("kind", choices=("rA",))
    p.add_argument("--algebra", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("-o", "--output", default=None)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_build)

    p = ysub.add_parser("verify", help="check braid/QYBE/invertibility")
    p.add_argument("operator", nargs="?", default="-",
                   help="operator JSON file, or - for stdin")
    p.add_argument("--braid", action="store_true")
    p.add_argument("--qybe", action="store_true")
    p.add_argument("--invertible", action="store_true")
    p.add_argument("--equivalence", action="store_true")
    _add_json(p)
    p.set_defaults(func=cmd_ybe_verify)

    p = ysub.add_parser("colored", help="verify the two-parameter family")
    p.add_argument("--algebra", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--grid", type=int, default=None)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_colored)

    p = ysub.add_parser("oneparam", help="verify the one-parameter family")
    p.add_argument("--algebra", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--grid", type=int, default=None)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_oneparam)

    p = ysub.add_parser("wxz38", help="verify the (W,X,Z) system")
    p.add_argument("--algebra", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_wxz38)

    p = ysub.add_parser("phi", help="build the bracket-plus-flip operator")
    p.add_argument("--lie", required=True)
    p.add_argument("--z", default=None, help="central vector, comma list")
    p.add_argument("--alpha", required=True)
    p.add_argument("-o", "--output", default=None)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_phi)

    p = ysub.add_parser("super-colored",
                        help="verify the colored bracket family")
    p.add_argument("--lie", required=True)
    p.add_argument("--z", default=None)
    p.add_argument("--alpha-table", required=True,
                   help="color=value pairs, comma separated")
    p.add_argument("--beta-table", required=True)
    p.add_argument("--colors", default=None)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_super_colored)

    p = ysub.add_parser("jordan-restricted",
                        help="braid relation on the squares family")
    p.add_argument("--algebra", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_jordan_restricted)

    p = ysub.add_parser("form8", help="match the 8x8 display template")
    p.add_argument("--algebra", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    _add_json(p)
    p.set_defaults(func=cmd_ybe_form8)

    p = sub.add_parser("dualize", help="transpose a structure to its dual")
    p.add_argument("source")
    p.add_argument("-o", "--output", default=None)
    _add_json(p)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("bench", help="compare the two arithmetic backends")
    p.add_argument("--size", type=int, default=64)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--chain", type=int, default=20)
    _add_json(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (CliInputError, GridConfigError, PreconditionError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    quiet = (args.command == "examples" and args.action == "list")
    if not quiet:
        stream = sys.stderr if report.to_stderr else sys.stdout
        emit_report(report, getattr(args, "json", False), stream=stream)
    return report.exit_status()


if __name__ == "__main__":
    sys.exit(main())
