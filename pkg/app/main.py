# app/main.py
"""
cht: type A / type B classification of complex hyperbolic triangle groups.

    cht classify 14 14 14 --json
    cht table --which typeA --n1 10..13
    cht verify --claim 'L5.1.*'
"""
import argparse
import sys
from typing import Literal, Optional

from pydantic import BaseModel, Field, ValidationError

from app.config.settings import BUDGET, JOBS, N2_CAP, ORACLE_STEPS, ORACLE_TOL, PRECISION_BITS, PRECISION_CAP
from app.enumeration import (
    infinity_column, reproduce_table1, scan_region, table1_to_markdown, table_to_csv, table_to_markdown,
    type_a_table, verdicts_to_csv, verdicts_to_json, verdicts_to_markdown,
)
from app.enumeration.tables import N3_CAP
from app.geometry import oracle_type
from app.typeclass import INF, Triple, VerdictType, classify, critical_interval
from app.utils.errors import ChtError, InputError
from app.utils.logging import get_logger
from app.utils.responses import dump, error_response, success_response
from app.verify import audit_F_derivation, run_lemma_suite, select, suite_passed
from app.verify.schemas import ClaimStatus

log = get_logger("cli")


class Command(BaseModel):
    verb: Literal["classify", "interval", "oracle", "enumerate", "table", "verify", "audit-f", "claims"]
    triple: Optional[Triple] = None
    as_json: bool = False
    format: Literal["csv", "json", "md"] = "md"
    precision_bits: int = Field(PRECISION_BITS, gt=0)
    precision_cap: int = Field(PRECISION_CAP, gt=0)
    steps: int = Field(ORACLE_STEPS, gt=1)
    tol: float = Field(ORACLE_TOL, gt=0)
    n1: Optional[tuple[int, int]] = None
    n2_max: Optional[int] = Field(None, gt=0)
    n3_cap: Optional[int] = Field(None, gt=0)
    which: Literal["1", "typeA"] = "typeA"
    claim: str = "**"
    budget: int = Field(BUDGET, gt=0)
    jobs: int = Field(JOBS, gt=0)
    timing: bool = True
    canaries: bool = False
    exhaustive: bool = False
    allow_diff: bool = False


def parse_n(token: str):
    token = token.strip()
    if token.lower() == "inf":
        return INF
    try:
        return int(token, 10)
    except ValueError:
        raise InputError(f"expected an integer >= 3 or 'inf', got {token!r}", code="INVALID_TRIPLE")


def parse_triple(tokens) -> Triple:
    tokens = list(tokens)
    if len(tokens) != 3:
        raise InputError(f"a triple needs three entries, got {len(tokens)}", code="INVALID_TRIPLE")
    return Triple.of(*(parse_n(t) for t in tokens))


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise InputError(f"expected a range A..B, got {text!r}", code="INVALID_RANGE")


# -- handlers: each returns (payload, exit code) and the text for non-JSON output -------------------

def _verdict_text(v) -> str:
    F = v.F_enclosure
    body = f"{v.triple.label()}: type {v.type.value}"
    if F is not None:
        body += f", F = {v.F_mid_text()} in [{F.to_dict()['lo']}, {F.to_dict()['hi']}]"
    if v.detail:
        body += f" ({v.detail})"
    return body


def handle_classify(cmd: Command):
    v = classify(cmd.triple, precision_cap=max(cmd.precision_cap, cmd.precision_bits), start_bits=cmd.precision_bits)
    code = 3 if v.type == VerdictType.INDETERMINATE else 0
    payload, _ = success_response("classified", v.to_dict(), code)
    return payload, code, _verdict_text(v)


def handle_interval(cmd: Command):
    ci = critical_interval(cmd.triple, precision=cmd.precision_bits)
    data = ci.to_dict()
    if ci.empty:
        text = f"{cmd.triple.label()}: critical interval is empty"
    else:
        lo, hi = data["lower"], data["upper"]
        text = (f"{cmd.triple.label()}: critical interval "
                f"{'[' if ci.lower_closed else '('}{lo['lo']}..{lo['hi']}, {hi['lo']}..{hi['hi']}"
                f"{']' if ci.upper_closed else ')'}")
    payload, code = success_response("critical interval", data)
    return payload, code, text


def handle_oracle(cmd: Command):
    v = oracle_type(cmd.triple, steps=cmd.steps, tol=cmd.tol)
    code = 3 if v.type == VerdictType.INDETERMINATE else 0
    payload, _ = success_response("oracle verdict", v.to_dict(), code)
    return payload, code, _verdict_text(v)


def handle_enumerate(cmd: Command):
    if cmd.n1 is None:
        raise InputError("enumerate needs --n1 A..B", code="INVALID_RANGE")
    lo, hi = cmd.n1
    n2_max = cmd.n2_max or max(hi, 30)
    n3_cap = cmd.n3_cap or max(n2_max, 100)
    bounds = {"n1": (lo, hi), "n2": (lo, n2_max), "n3": (lo, n3_cap)}
    verdicts = list(scan_region(bounds, prune=not cmd.exhaustive, precision_cap=cmd.precision_cap))
    data = verdicts_to_json(verdicts)
    if cmd.format == "csv":
        text = verdicts_to_csv(verdicts)
    elif cmd.format == "json":
        text = dump(data)
    else:
        text = verdicts_to_markdown(verdicts)
    code = 3 if any(v.type == VerdictType.INDETERMINATE for v in verdicts) else 0
    payload, _ = success_response(f"{len(verdicts)} triples", data, code)
    return payload, code, text


def handle_table(cmd: Command):
    if cmd.which == "1":
        rows = reproduce_table1(precision_cap=cmd.precision_cap)
        data = [r.to_dict() for r in rows]
        text = dump(data) if cmd.format == "json" else table1_to_markdown(rows)
        code = 0 if all(r.matches for r in rows) else 1
        payload, _ = success_response("Table 1", data, code)
        return payload, code, text
    n1 = cmd.n1 or (10, 13)
    rows = type_a_table(n1, n2_max=cmd.n2_max or N2_CAP, n3_cap=cmd.n3_cap or N3_CAP,
                        precision_cap=cmd.precision_cap, jobs=cmd.jobs)
    data = {"rows": [r.to_dict() for r in rows], "infinity_column": infinity_column(rows)}
    if cmd.format == "csv":
        text = table_to_csv(rows)
    elif cmd.format == "json":
        text = dump(data)
    else:
        text = table_to_markdown(rows)
    payload, code = success_response("type A table", data)
    return payload, code, text


def _suite_code(reports) -> int:
    if suite_passed(reports):
        return 0
    if any(r.status == ClaimStatus.REFUTED and not r.passed for r in reports):
        return 1
    if any(r.status == ClaimStatus.PROVED and not r.passed for r in reports):
        return 1  # a canary came back Proved
    return 3


def handle_verify(cmd: Command):
    reports = run_lemma_suite(cmd.claim, jobs=cmd.jobs, budget=cmd.budget, canaries=cmd.canaries)
    data = [r.to_dict(timing=cmd.timing) for r in reports]
    code = _suite_code(reports)
    lines = []
    for r in reports:
        line = f"{r.id:<24} {r.status.value:<16} {r.effort:>8}"
        if r.witness:
            line += "  witness " + ", ".join(f"{k}={v}" for k, v in sorted(r.witness.items()))
        if not r.passed:
            line += f"  (expected {r.expect.value})"
        lines.append(line)
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} as expected")
    if code == 0:
        payload, _ = success_response("suite passed", data)
    else:
        payload, _ = error_response("suite failed", code="SUITE_FAILED", data=data, exit_code=code)
    return payload, code, "\n".join(lines)


def handle_audit(cmd: Command):
    report = audit_F_derivation()
    data = report.to_dict(timing=cmd.timing)
    details = report.details
    if report.status == ClaimStatus.PROVED:
        code = 0
        text = f"F = f_B(T_A): all {details['terms']} terms match"
    else:
        code = 0 if cmd.allow_diff else 1
        text = "\n".join([f"F differs from f_B(T_A) in {len(details['diff'])} term(s):"]
                         + [f"  {d['monomial']}: derived {d['derived']}, printed {d['printed']}"
                            for d in details["diff"]])
    text += f"\nmatrix trace of W_A realizes {details['trace_probe']['realized']}"
    if code == 0:
        payload, _ = success_response("audit", data)
    else:
        payload, _ = error_response("F does not match", code="AUDIT_MISMATCH", data=data, exit_code=code)
    return payload, code, text


def handle_claims(cmd: Command):
    claims = select(cmd.claim, canaries=cmd.canaries)
    data = [c.describe() for c in claims]
    lines = [f"{c.id:<24} {c.kind.value:<18} {c.statement}" + (f"  [{c.note}]" if c.note else "") for c in claims]
    payload, code = success_response(f"{len(claims)} claims", data)
    return payload, code, "\n".join(lines)


HANDLERS = {
    "classify": handle_classify,
    "interval": handle_interval,
    "oracle": handle_oracle,
    "enumerate": handle_enumerate,
    "table": handle_table,
    "verify": handle_verify,
    "audit-f": handle_audit,
    "claims": handle_claims,
}


def _failure(exc: ChtError, as_json: bool) -> tuple[int, str]:
    payload, code = error_response(exc.message, code=exc.code, errors=exc.errors, exit_code=exc.exit_code)
    return code, dump(payload) if as_json else f"error: {exc.message}"


def execute(cmd: Command) -> tuple[int, str, bool]:
    """Run one command; returns (exit code, output text, whether it raised)."""
    try:
        payload, code, text = HANDLERS[cmd.verb](cmd)
    except ChtError as exc:
        log.info("%s failed: %s", cmd.verb, exc.message)
        code, text = _failure(exc, cmd.as_json)
        return code, text, True
    return code, dump(payload) if cmd.as_json else text, False


# -- argument parsing ----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cht", description=__doc__.strip().splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True)

    def add(name, help_text, triple=False):
        p = verbs.add_parser(name, help=help_text)
        if triple:
            p.add_argument("n", nargs=3, metavar="N", help="n1 n2 n3, each an integer >= 3 or inf")
        p.add_argument("--json", action="store_true", help="emit the JSON envelope")
        p.add_argument("--precision-bits", type=int, default=PRECISION_BITS)
        p.add_argument("--precision-cap", type=int, default=PRECISION_CAP)
        return p

    add("classify", "type A/B by the sign of F", triple=True)
    add("interval", "critical interval and its endpoints", triple=True)
    p = add("oracle", "type by explicit matrices", triple=True)
    p.add_argument("--steps", type=int, default=ORACLE_STEPS)
    p.add_argument("--tol", type=float, default=ORACLE_TOL)

    p = add("enumerate", "classify every ordered triple in a region")
    p.add_argument("--n1", required=True, help="A..B")
    p.add_argument("--n2-max", type=int)
    p.add_argument("--n3-cap", type=int)
    p.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    p.add_argument("--exhaustive", action="store_true", help="classify every n3, no pruning")

    p = add("table", "reproduce Table 1 or the type A table")
    p.add_argument("--which", choices=("1", "typeA"), default="typeA")
    p.add_argument("--n1", help="A..B (type A table only)")
    p.add_argument("--n2-max", type=int)
    p.add_argument("--n3-cap", type=int)
    p.add_argument("--format", choices=("csv", "json", "md"), default="md")
    p.add_argument("--jobs", type=int, default=JOBS)

    for name, help_text in (("verify", "run the claim suite"), ("claims", "list registered claims")):
        p = add(name, help_text)
        p.add_argument("--claim", default="**", help="glob on claim ids; * stays within a dotted part")
        p.add_argument("--canaries", action="store_true", help="include the deliberately false claims")
        if name == "verify":
            p.add_argument("--budget", type=int, default=BUDGET)
            p.add_argument("--jobs", type=int, default=JOBS)
            p.add_argument("--no-timing", action="store_true", help="omit elapsed times from JSON")

    p = add("audit-f", "check F against f_B(T_A) and probe the matrix trace constant")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--allow-diff", action="store_true", help="exit 0 even when a coefficient differs")
    return parser


def to_command(args: argparse.Namespace) -> Command:
    fields = {"verb": args.verb, "as_json": args.json, "precision_bits": args.precision_bits,
              "precision_cap": args.precision_cap}
    if getattr(args, "n", None):
        fields["triple"] = parse_triple(args.n)
    if getattr(args, "n1", None):
        fields["n1"] = parse_range(args.n1)
    for name in ("steps", "tol", "n2_max", "n3_cap", "format", "which", "claim", "budget", "jobs",
                 "canaries", "exhaustive", "allow_diff"):
        value = getattr(args, name, None)
        if value is not None:
            fields[name] = value
    fields["timing"] = not getattr(args, "no_timing", False)
    try:
        return Command(**fields)
    except ValidationError as exc:
        raise InputError("; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors()),
                         code="INVALID_INPUT")


def _print(text: str, failed: bool, as_json: bool):
    # JSON envelopes always go to stdout; plain error text goes to stderr
    if text:
        print(text.rstrip("\n"), file=sys.stderr if failed and not as_json else sys.stdout)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cmd = to_command(args)
    except ChtError as exc:
        code, text = _failure(exc, args.json)
        _print(text, True, args.json)
        return code
    code, text, failed = execute(cmd)
    _print(text, failed, cmd.as_json)
    return code


if __name__ == "__main__":
    sys.exit(main())
