"""Command-line front end.

    rieszlex solve  --group D --eq A1 A2 B1 B2
    rieszlex verify --group D --table-file T
    rieszlex check  --group D --property P [--elems X ...]
    rieszlex oracle --group D --eq A1 A2 B1 B2 [--search table|wrdp-k]
    rieszlex case   ID | --all
    rieszlex schema

Exit codes: 0 success, 1 usage or malformed input, 2 no rule / not found /
property fails, 3 construction failed, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import casebook
from .codec import FORMAT, decode_descriptor, decode_element, dumps, encode_descriptor, encode_element
from .dsl import parse_descriptor, parse_element, print_descriptor, print_element
from .errors import (
    ConstructionFailed,
    InvalidEquation,
    InvalidWitness,
    NoRuleApplies,
    NotApplicable,
    NotComDirected,
    NotDirected,
    NotFound,
    ParseError,
    ShapeMismatch,
    UnknownCase,
    Unsupported,
)
from .groups import Free, SearchBudget
from .oracle import brute_force_table, search_wrdp_k
from .props import (
    antilattice_status,
    com_directed_witness,
    directed_witness,
    ncdp_witness,
    wrdp_witnesses,
)
from .rdp import Equation, RdpTable, TableReport, interpolate, rdp0_decompose, verify_table
from .solvers import SolverTrace, solve
from .verdict import Status

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_CONSTRUCTION, EXIT_PARSE = 0, 1, 2, 3, 4

PROPERTIES = {
    # name: number of element arguments
    "directed": 2,
    "com-directed": 2,
    "antilattice": 0,
    "ncdp": 2,
    "wrdp": 4,
    "rdp0": 3,
    "rip": 4,
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# JSON shapes
# ---------------------------------------------------------------------------


def trace_json(tr: SolverTrace) -> dict:
    out: dict[str, Any] = {"tag": tr.tag}
    if tr.aux:
        out["aux"] = {k: casebook.show(v) for k, v in tr.aux.items()}
    if tr.sub:
        out["sub"] = [trace_json(s) for s in tr.sub]
    return out


def table_json(desc, t: RdpTable) -> dict:
    enc = lambda x: encode_element(desc, x)  # noqa: E731
    return {
        "equation": [enc(x) for x in t.equation.elements()],
        "entries": [enc(x) for x in t.entries()],
    }


def report_json(desc, rep: TableReport) -> dict:
    out: dict[str, Any] = {"verified": rep.is_rdp_table, "sums": rep.sums_ok, "positive": list(rep.positivity)}
    if rep.rdp1 is not None:
        out["rdp1"] = rep.rdp1.to_json(desc)
    if rep.rdp2 is not None:
        out["rdp2"] = rep.rdp2.to_json(desc)
    return out


SCHEMAS = {
    "descriptor": {
        "type": "object",
        "required": ["type"],
        "properties": {
            "type": {"enum": ["Int", "Rat", "Matrix", "Free", "Prod", "Lex", "Trivial"]},
            "k": {"type": "integer"},
            "vals": {"type": "array", "items": {"type": "string"}},
            "abelian": {"type": "boolean"},
            "mode": {"enum": ["product", "strict"]},
            "children": {"type": "array"},
            "first": {"type": "object"},
            "second": {"type": "object"},
            "child": {"type": "object"},
        },
    },
    "element": {
        "description": "numbers as strings; Matrix as [a, b]; words as [[generator, sign], ...]; Prod and Lex as arrays",
    },
    "solve": {
        "type": "object",
        "required": ["format", "group", "table", "trace", "report"],
        "properties": {
            "format": {"const": FORMAT},
            "group": {"$ref": "#/descriptor"},
            "table": {"type": "object", "required": ["equation", "entries"]},
            "trace": {"type": "object", "required": ["tag"]},
            "report": {"type": "object", "required": ["verified"]},
        },
    },
    "verdict": {
        "type": "object",
        "required": ["status", "evidence", "bounded"],
        "properties": {
            "status": {"enum": [s.value for s in Status]},
            "evidence": {"type": "object"},
            "bounded": {"type": "boolean"},
            "reason": {"type": "string"},
            "budget": {"type": "object"},
        },
    },
    "case": {
        "type": "object",
        "required": ["format", "case", "inputs", "claims", "passed"],
    },
}


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-coord", type=int, default=6)
    common.add_argument("--budget-wordlen", type=int, default=4)
    common.add_argument("--budget-candidates", type=int, default=4000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def grouped(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--group", help="descriptor in the text syntax")
        g.add_argument("--group-file", help="file holding a descriptor (text syntax or JSON)")

    p = argparse.ArgumentParser(prog="rieszlex", description="Riesz decomposition toolkit for partially ordered groups")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="build an RDP table")
    grouped(s)
    s.add_argument("--eq", nargs=4, metavar=("A1", "A2", "B1", "B2"), required=True)
    s.add_argument("--no-properties", action="store_true", help="skip the RDP1/RDP2 checks")

    v = sub.add_parser("verify", parents=[common], help="re-check a table produced by solve")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--group")
    g.add_argument("--group-file")
    v.add_argument("--table-file", required=True)

    c = sub.add_parser("check", parents=[common], help="test an order property")
    grouped(c)
    c.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    c.add_argument("--elems", nargs="*", default=[])

    o = sub.add_parser("oracle", parents=[common], help="brute-force search")
    grouped(o)
    o.add_argument("--eq", nargs=4, metavar=("A1", "A2", "B1", "B2"), required=True)
    o.add_argument("--search", choices=("table", "wrdp-k"), default="table")

    k = sub.add_parser("case", parents=[common], help="run a casebook entry")
    k.add_argument("case_id", nargs="?")
    k.add_argument("--all", action="store_true")
    k.add_argument("--list", action="store_true")

    sub.add_parser("schema", parents=[common], help="print the JSON schemas")
    return p


def _budget(ns) -> SearchBudget:
    return SearchBudget(ns.budget_coord, ns.budget_wordlen, ns.budget_candidates, ns.seed)


def _read_group(text: str | None, path: str | None):
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        stripped = text.strip()
        if stripped.startswith("{"):
            obj = json.loads(stripped)
            return decode_descriptor(obj.get("group", obj))
        text = stripped
    if text is None:
        raise UsageError("a group is required (--group or --group-file)")
    return parse_descriptor(text)


def _emit(ns, obj: dict, human: str) -> None:
    print(dumps(obj) if ns.json else human)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_solve(ns) -> int:
    desc = _read_group(ns.group, ns.group_file)
    budget = _budget(ns)
    eq = Equation(*(parse_element(desc, e) for e in ns.eq))
    table, trace = solve(desc, eq, budget)
    rep = verify_table(desc, table, budget, properties=not ns.no_properties)
    obj = {
        "format": FORMAT,
        "group": encode_descriptor(desc),
        "table": table_json(desc, table),
        "trace": trace_json(trace),
        "report": report_json(desc, rep),
    }
    pe = lambda x: print_element(desc, x)  # noqa: E731
    lines = [
        f"group: {print_descriptor(desc)}",
        f"rule:  {' > '.join(trace.tags())}",
        f"  c11 = {pe(table.c11)}    c12 = {pe(table.c12)}",
        f"  c21 = {pe(table.c21)}    c22 = {pe(table.c22)}",
        f"verified: {rep.is_rdp_table}",
    ]
    if rep.rdp1 is not None:
        lines.append(f"RDP1: {rep.rdp1.status.value}   RDP2: {rep.rdp2.status.value}")
    _emit(ns, obj, "\n".join(lines))
    return EXIT_OK if rep.is_rdp_table else EXIT_CONSTRUCTION


def cmd_verify(ns) -> int:
    with open(ns.table_file, encoding="utf-8") as fh:
        obj = json.load(fh)
    if ns.group or ns.group_file:
        desc = _read_group(ns.group, ns.group_file)
    elif "group" in obj:
        desc = decode_descriptor(obj["group"])
    else:
        raise UsageError("the table file has no group; pass --group or --group-file")
    t = obj.get("table", obj)
    eq = Equation(*(decode_element(desc, x) for x in t["equation"]))
    table = RdpTable(*(decode_element(desc, x) for x in t["entries"]), equation=eq)
    budget = _budget(ns)
    rep = verify_table(desc, table, budget)
    out = {"format": FORMAT, "group": encode_descriptor(desc), "report": report_json(desc, rep)}
    human = f"verified: {rep.is_rdp_table}"
    if rep.rdp1 is not None:
        human += f"\nRDP1: {rep.rdp1.status.value}   RDP2: {rep.rdp2.status.value}"
    _emit(ns, out, human)
    return EXIT_OK if rep.is_rdp_table else EXIT_NEGATIVE


def cmd_check(ns) -> int:
    desc = _read_group(ns.group, ns.group_file)
    budget = _budget(ns)
    want = PROPERTIES[ns.property]
    if len(ns.elems) != want:
        raise UsageError(f"--property {ns.property} takes {want} element(s), got {len(ns.elems)}")
    xs = [parse_element(desc, e) for e in ns.elems]
    enc = lambda x: encode_element(desc, x)  # noqa: E731
    out: dict[str, Any] = {"format": FORMAT, "group": encode_descriptor(desc), "property": ns.property}
    code = EXIT_OK
    match ns.property:
        case "antilattice":
            v = antilattice_status(desc, budget)
            out["verdict"] = v.to_json(desc)
            human = f"antilattice: {v.status.value}" + (f" ({v.reason})" if v.reason else "")
            code = EXIT_OK if v.status in (Status.HOLDS, Status.HOLDS_SAMPLED) else EXIT_NEGATIVE
        case "directed":
            w = directed_witness(desc, *xs)
            out["witness"] = enc(w)
            human = f"common lower bound: {print_element(desc, w)}"
        case "com-directed":
            w = com_directed_witness(desc, *xs)
            out["witness"] = enc(w)
            human = f"central common lower bound: {print_element(desc, w)}"
        case "ncdp":
            w = ncdp_witness(desc, *xs, budget=budget)
            out["witness"] = enc(w)
            human = f"NCDP witness: {print_element(desc, w)}"
        case "wrdp":
            d1, d2 = wrdp_witnesses(desc, *xs, budget=budget)
            out["witness"] = {"d1": enc(d1), "d2": enc(d2)}
            human = f"d1 = {print_element(desc, d1)}\nd2 = {print_element(desc, d2)}"
        case "rdp0":
            b1, c1 = rdp0_decompose(desc, *xs, budget=budget)
            out["witness"] = {"b1": enc(b1), "c1": enc(c1)}
            human = f"b1 = {print_element(desc, b1)}\nc1 = {print_element(desc, c1)}"
        case "rip":
            c = interpolate(desc, *xs, budget=budget)
            out["witness"] = enc(c)
            human = f"interpolant: {print_element(desc, c)}"
    out["holds"] = code == EXIT_OK
    _emit(ns, out, human)
    return code


def cmd_oracle(ns) -> int:
    desc = _read_group(ns.group, ns.group_file)
    budget = _budget(ns)
    xs = [parse_element(desc, e) for e in ns.eq]
    if ns.search == "wrdp-k":
        if not isinstance(desc, Free):
            raise UsageError("--search wrdp-k needs a Free carrier")
        v = search_wrdp_k(desc, *xs, budget=budget)
    else:
        v = brute_force_table(desc, Equation(*xs), budget)
    out = {"format": FORMAT, "group": encode_descriptor(desc), "search": ns.search, "verdict": v.to_json(desc)}
    human = v.status.value
    if v.evidence:
        human += "\n" + "\n".join(f"  {k} = {print_element(desc, x)}" for k, x in v.evidence.items())
    if v.reason:
        human += f"\n  ({v.reason})"
    _emit(ns, out, human)
    return EXIT_OK if v.status is Status.FOUND else EXIT_NEGATIVE


def cmd_case(ns) -> int:
    if ns.list:
        print("\n".join(casebook.CASES))
        return EXIT_OK
    if ns.all == (ns.case_id is not None):
        raise UsageError("give exactly one of a case id or --all")
    ids = list(casebook.CASES) if ns.all else [ns.case_id]
    explicit = any(
        getattr(ns, f) != d for f, d in (("budget_coord", 6), ("budget_wordlen", 4), ("budget_candidates", 4000), ("seed", 0))
    )
    budget = _budget(ns) if explicit else None
    reports = [casebook.run_case(i, budget) for i in ids]
    if ns.json:
        obj = reports[0].to_json() if len(reports) == 1 and not ns.all else {
            "format": FORMAT,
            "cases": [r.to_json() for r in reports],
            "passed": all(r.passed for r in reports),
        }
        print(dumps(obj))
    else:
        print("\n".join(r.summary() for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def cmd_schema(ns) -> int:
    print(dumps({"format": FORMAT, "schemas": SCHEMAS}) if ns.json else json.dumps(SCHEMAS, indent=2, sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "check": cmd_check,
    "oracle": cmd_oracle,
    "case": cmd_case,
    "schema": cmd_schema,
}


def _fail(ns, code: int, exc: BaseException) -> int:
    name = type(exc).__name__
    msg = str(exc.args[0]) if isinstance(exc, KeyError) and exc.args else str(exc)
    if ns is not None and getattr(ns, "json", False):
        print(dumps({"format": FORMAT, "error": name, "message": msg}))
    else:
        print(f"error: {name}: {msg}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        ns = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[ns.command](ns)
    except ParseError as exc:
        return _fail(ns, EXIT_PARSE, exc)
    except (UsageError, ShapeMismatch, InvalidEquation, InvalidWitness, UnknownCase, OSError, json.JSONDecodeError, KeyError) as exc:
        return _fail(ns, EXIT_USAGE, exc)
    except ConstructionFailed as exc:
        return _fail(ns, EXIT_CONSTRUCTION, exc)
    except (NoRuleApplies, NotFound, NotDirected, NotComDirected, NotApplicable, Unsupported) as exc:
        return _fail(ns, EXIT_NEGATIVE, exc)


if __name__ == "__main__":
    sys.exit(main())
