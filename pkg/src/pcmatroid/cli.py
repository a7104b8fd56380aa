"""Command-line front end.

Every command reads one JSON document (``--input PATH`` or ``--json TEXT``),
runs a single library operation and prints::

    {"schema": 1, "command": ..., "result": ..., "diagnostics": [...]}

Exit status is 0 on success, 1 on invalid input (or a failed ``verify``),
and 2 when a brute-force bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serial
from .approxnum import Covering, lower_number, upper_number
from .errors import CapacityError, ValidationError
from .family import SetFamily
from .ground import BRUTE_FORCE_LIMIT, Subset
from .matroid import CHECKERS, Matroid, matroid_from_bases, matroid_from_circuits
from .pcm import PartitionCircuitMatroid, PartitionMatroid
from .rough import Partition, boundary, lower_approx, upper_approx
from . import verify as sweeps

SCHEMA = 1
COMMANDS = ("approx", "approx-number", "check-axioms", "build", "rank", "closure",
            "circuits", "bases", "dual", "greedy", "verify")
DOC_KEYS = {"universe", "blocks", "pairs", "partition", "capacities", "weights",
            "circuits", "independents", "bases", "family", "set"}
KINDS = ("independents", "bases", "circuits")


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, law="usage")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pcmatroid", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", metavar="PATH", help="read the JSON document from PATH ('-' for stdin)")
    parser.add_argument("--json", metavar="TEXT", help="inline JSON document")
    parser.add_argument("--set", metavar="CSV", help="subset argument as comma-separated labels")
    parser.add_argument("--capacities", metavar="CSV", help="per-block capacities")
    parser.add_argument("--weights", metavar="CSV", help="per-element weights")
    parser.add_argument("--max-n", type=int, default=5, help="largest universe for exhaustive sweeps")
    parser.add_argument("--reflexive-close", action="store_true",
                        help="add missing (a, a) pairs to a relation")
    parser.add_argument("--kind", choices=KINDS, help="which axiom system to check")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return parser


# -- input handling ---------------------------------------------------------

def _load_document(args) -> dict:
    if args.input is not None and args.json is not None:
        raise UsageError("give only one of --input and --json", law="usage")
    if args.input is None and args.json is None:
        raise UsageError(f"{args.command} needs --input or --json", law="usage")
    if args.json is not None:
        text = args.json
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise ValidationError(f"cannot read {args.input}: {err.strerror}", law="input") from None
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValidationError("the input document must be a JSON object", law="schema")
    unknown = sorted(set(doc) - DOC_KEYS)
    if unknown:
        raise ValidationError(f"unknown key(s) in input: {', '.join(unknown)}", law="schema",
                              witness=tuple(unknown))
    return doc


def _partition_doc(doc: dict):
    """The sub-document describing a partition, with the outer universe as fallback."""
    inner = doc.get("partition")
    if inner is None:
        return doc if ("blocks" in doc or "pairs" in doc) else None
    if not isinstance(inner, dict):
        raise ValidationError('"partition" must be an object', law="schema")
    if "universe" not in inner and "universe" in doc:
        inner = {**inner, "universe": doc["universe"]}
    return inner


def _partition(doc: dict, args) -> Partition | None:
    pdoc = _partition_doc(doc)
    if pdoc is None:
        return None
    if "pairs" in pdoc and "blocks" not in pdoc:
        return serial.partition_from_relation_json(pdoc, args.reflexive_close)
    return serial.partition_from_json(pdoc)


def _require_partition(doc, args) -> Partition:
    p = _partition(doc, args)
    if p is None:
        raise ValidationError("this command needs a partition (blocks or pairs)", law="schema")
    return p


def _subset(doc: dict, args, universe) -> Subset:
    if args.set is not None:
        raw = args.set.strip()
        items = [s.strip() for s in raw.split(",")] if raw else []
        if universe.labels is None:
            try:
                items = [int(s) for s in items]
            except ValueError:
                raise ValidationError(f"--set {args.set!r}: elements of an unlabeled universe are indices",
                                      law="schema") from None
        elif all(isinstance(lab, int) for lab in universe.labels):
            items = [int(s) if s.lstrip("-").isdigit() else s for s in items]
        return universe.subset_of_labels(items)
    if "set" in doc:
        return serial.subset_from_json(universe, doc["set"])
    raise ValidationError("this command needs a subset (--set or \"set\")", law="schema")


def _csv_numbers(text: str, kind, what: str) -> list:
    out = []
    for s in (t.strip() for t in text.split(",")) if text.strip() else ():
        try:
            out.append(kind(s))
        except ValueError:
            raise ValidationError(f"--{what}: {s!r} is not a number", law="schema") from None
    return out


def _number(s: str):
    v = float(s)
    return int(v) if v.is_integer() and "." not in s and "e" not in s.lower() else v


def _capacities(doc, args):
    if args.capacities is not None:
        return _csv_numbers(args.capacities, int, "capacities")
    caps = doc.get("capacities")
    if caps is not None and not isinstance(caps, list):
        raise ValidationError('"capacities" must be an array of integers', law="schema")
    return caps


def _weights(doc, args):
    if args.weights is not None:
        return _csv_numbers(args.weights, _number, "weights")
    w = doc.get("weights")
    if w is None:
        raise ValidationError("greedy needs weights (--weights or \"weights\")", law="schema")
    if not isinstance(w, list):
        raise ValidationError('"weights" must be an array of numbers', law="schema")
    return w


def _general_matroid(doc: dict) -> Matroid | None:
    present = [k for k in KINDS if k in doc]
    if not present:
        return None
    if len(present) > 1:
        raise ValidationError(f"give only one of {', '.join(present)}", law="schema")
    u = serial._universe(doc)
    fam = serial.family_from_json(u, doc[present[0]])
    if present[0] == "circuits":
        return matroid_from_circuits(fam)
    if present[0] == "bases":
        return matroid_from_bases(fam)
    return Matroid(u, fam)


def _structure(doc, args):
    """Resolve the document to a partition-backed matroid or an explicit one."""
    p = _partition(doc, args)
    if p is not None:
        caps = _capacities(doc, args)
        if caps is None:
            return PartitionCircuitMatroid(p)
        return PartitionMatroid(p, tuple(caps))
    m = _general_matroid(doc)
    if m is None:
        raise ValidationError("no partition, circuits, bases or independents in input", law="schema")
    return m


def _as_oracle(m) -> Matroid:
    if isinstance(m, Matroid):
        return m
    return Matroid.from_test(m.universe, m.is_independent, validate=False)


# -- commands -----------------------------------------------------------------

def cmd_approx(doc, args, diag):
    p = _require_partition(doc, args)
    x = _subset(doc, args, p.universe)
    return {"lower": lower_approx(p, x).labels(), "upper": upper_approx(p, x).labels(),
            "boundary": boundary(p, x).labels()}


def cmd_approx_number(doc, args, diag):
    pdoc = _partition_doc(doc)
    if pdoc is None:
        raise ValidationError("approx-number needs blocks", law="schema")
    c = serial.covering_from_json(pdoc) if "blocks" in pdoc else Covering.from_partition(_require_partition(doc, args))
    if c.deduplicated:
        diag.append("duplicate blocks were removed from the covering")
    x = _subset(doc, args, c.universe)
    return {"lower": lower_number(c, x), "upper": upper_number(c, x), "blocks": len(c)}


def cmd_check_axioms(doc, args, diag):
    if args.kind is None:
        raise UsageError("check-axioms needs --kind", law="usage")
    if args.kind in doc or "family" in doc:
        if args.kind in doc and "family" in doc:
            raise ValidationError(f'give only one of "{args.kind}" and "family"', law="schema")
        u = serial._universe(doc)
        fam = serial.family_from_json(u, doc[args.kind] if args.kind in doc else doc["family"])
    else:
        pdoc = _partition_doc(doc)
        if pdoc is None or "blocks" not in pdoc:
            raise ValidationError(f'no "{args.kind}", "family" or "blocks" in input', law="schema")
        u = serial._universe(pdoc)
        fam = serial.family_from_json(u, pdoc["blocks"])
    report = CHECKERS[args.kind](fam)
    if not report.verdict:
        diag.append(report.to_json())
    return report.verdict


def _describe(m) -> dict:
    u = m.universe
    out = {}
    if isinstance(m, PartitionCircuitMatroid):
        out["partition"] = serial.partition_to_json(m.partition)["blocks"]
        out["capacities"] = list(m.as_partition_matroid().capacities)
        out["rank"] = m.rank(u.full)
        out["independents"] = serial.family_to_json(SetFamily.where(u, m.is_independent))
        out["bases"] = serial.family_to_json(m.bases())
        out["circuits"] = serial.family_to_json(m.circuits())
        return out
    if isinstance(m, PartitionMatroid):
        out["partition"] = serial.partition_to_json(m.partition)["blocks"]
        out["capacities"] = list(m.capacities)
        m = _as_oracle(m)
    out["rank"] = m.rank(u.full)
    out["independents"] = serial.family_to_json(m.independents)
    out["bases"] = serial.family_to_json(m.bases())
    out["circuits"] = serial.family_to_json(m.circuits())
    return out


def cmd_build(doc, args, diag):
    m = _structure(doc, args)
    if isinstance(m, PartitionMatroid) and m.clamped:
        diag.append("capacities above block size were clamped")
    return _describe(m)


def cmd_rank(doc, args, diag):
    m = _structure(doc, args)
    return m.rank(_subset(doc, args, m.universe))


def cmd_closure(doc, args, diag):
    m = _structure(doc, args)
    x = _subset(doc, args, m.universe)
    if isinstance(m, PartitionMatroid):
        m = _as_oracle(m)
    cl = m.closure(x)
    return {"closure": cl.labels(), "is_closed": cl == x}


def cmd_circuits(doc, args, diag):
    m = _structure(doc, args)
    if isinstance(m, PartitionMatroid):
        m = _as_oracle(m)
    return serial.family_to_json(m.circuits())


def cmd_bases(doc, args, diag):
    m = _structure(doc, args)
    if isinstance(m, PartitionMatroid):
        m = _as_oracle(m)
    return serial.family_to_json(m.bases())


def cmd_dual(doc, args, diag):
    m = _structure(doc, args)
    x = None
    if args.set is not None or "set" in doc:
        x = _subset(doc, args, m.universe)
    if isinstance(m, PartitionCircuitMatroid):
        out = {"capacities": list(m.dual().capacities)}
        if x is not None:
            out.update(independent=m.dual_is_independent(x), rank=m.dual_rank(x),
                       closure=m.dual_closure(x).labels())
        return out
    if isinstance(m, PartitionMatroid):
        d = m.dual()
        out = {"capacities": list(d.capacities)}
        if x is not None:
            out.update(independent=d.is_independent(x), rank=d.rank(x))
        return out
    d = m.dual()
    out = {"bases": serial.family_to_json(d.bases())}
    if x is not None:
        out.update(independent=d.is_independent(x), rank=d.rank(x), closure=d.closure(x).labels())
    return out


def cmd_greedy(doc, args, diag):
    p = _require_partition(doc, args)
    caps = _capacities(doc, args)
    pm = PartitionCircuitMatroid(p).as_partition_matroid() if caps is None else PartitionMatroid(p, tuple(caps))
    if pm.clamped:
        diag.append("capacities above block size were clamped")
    w = _weights(doc, args)
    chosen = pm.greedy_max_weight_independent(w)
    return {"set": chosen.labels(), "weight": sum(w[i] for i in chosen)}


def cmd_verify(doc, args, diag):
    if args.max_n < 0:
        raise ValidationError("--max-n must be nonnegative", law="usage")
    if args.max_n > BRUTE_FORCE_LIMIT:
        raise CapacityError(f"--max-n {args.max_n} exceeds the brute-force bound {BRUTE_FORCE_LIMIT}")
    results = sweeps.run_all(args.max_n)
    for r in results:
        diag.extend(f"{r.name}: {f}" for f in r.failures)
    return {"passed": all(r.ok for r in results), "sweeps": [r.to_json() for r in results]}


HANDLERS = {
    "approx": cmd_approx,
    "approx-number": cmd_approx_number,
    "check-axioms": cmd_check_axioms,
    "build": cmd_build,
    "rank": cmd_rank,
    "closure": cmd_closure,
    "circuits": cmd_circuits,
    "bases": cmd_bases,
    "dual": cmd_dual,
    "greedy": cmd_greedy,
    "verify": cmd_verify,
}


def _error_payload(command, kind, message, **extra):
    err = {"kind": kind, "message": message}
    err.update({k: v for k, v in extra.items() if v is not None})
    return {"schema": SCHEMA, "command": command, "error": err}


def _jsonable_witness(witness):
    if witness is None:
        return None
    return [w.labels() if isinstance(w, Subset) else w for w in witness]


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv`` and execute; returns ``(exit_status, payload)``."""
    command = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        doc = {} if command == "verify" and args.input is None and args.json is None else _load_document(args)
        diag: list = []
        result = HANDLERS[command](doc, args, diag)
    except json.JSONDecodeError as err:
        return 1, _error_payload(command, "parse", err.msg, line=err.lineno, column=err.colno, position=err.pos)
    except CapacityError as err:
        return 2, _error_payload(command, "capacity", str(err))
    except ValidationError as err:
        return 1, _error_payload(command, "validation", str(err), law=err.law,
                                 witness=_jsonable_witness(err.witness))
    payload = {"schema": SCHEMA, "command": command, "result": result, "diagnostics": diag}
    if command == "verify" and not result["passed"]:
        return 1, payload
    return 0, payload


def main(argv=None) -> int:
    status, payload = run(argv)
    args_pretty = "--pretty" in (sys.argv[1:] if argv is None else argv)
    print(json.dumps(payload, indent=2 if args_pretty else None))
    if "error" in payload:
        print(f"pcmatroid: {payload['error']['message']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
