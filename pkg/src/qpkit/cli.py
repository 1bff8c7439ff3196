"""
Command-line front end.

Every command prints one JSON report on stdout (sorted keys, so identical
inputs give byte-identical output) and a one-line summary on stderr unless
``--json`` is given.  Exit codes: 0 affirmative, 1 negative or inconclusive,
2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import garside, lattice, presentation, qp, stein
from .braid import closure_permutation, exponent_sum, parse_word
from .errors import QPKitError


@dataclass
class RunReport:
    command: str
    inputs: list = field(default_factory=list)
    verdict: str = ""
    details: dict = field(default_factory=dict)
    exit_code: int = 0
    json_only: bool = False

    def to_json(self) -> str:
        obj = {"command": self.command, "inputs": self.inputs, "verdict": self.verdict,
               "details": self.details, "exit_code": self.exit_code}
        return json.dumps(obj, sort_keys=True, indent=2)


class _Inputs:
    """Reads input files once and records their digests for the report."""

    def __init__(self):
        self.records = []

    def read(self, path: str) -> str:
        data = Path(path).read_bytes()
        self.records.append({"name": Path(path).name,
                             "sha256": hashlib.sha256(data).hexdigest()})
        return data.decode("ascii")

    def json(self, path: str):
        return json.loads(self.read(path))


def _braid_details(w) -> dict:
    return {"strands": w.strands, "exponent_sum": exponent_sum(w),
            "permutation": list(closure_permutation(w).images)}


def cmd_equal(args, io: _Inputs) -> RunReport:
    u = parse_word(io.read(args.u), args.strands)
    v = parse_word(io.read(args.v), args.strands)
    eq = garside.words_equal(u, v)
    return RunReport("equal", verdict="equal" if eq else "not-equal", exit_code=0 if eq else 1,
                     details={"u": _braid_details(u), "v": _braid_details(v)})


def cmd_normalize(args, io: _Inputs) -> RunReport:
    w = parse_word(io.read(args.file), args.strands)
    nf = garside.canonical_form(w)
    return RunReport("normalize", verdict="normalized",
                     details={"canonical_form": nf.to_json(), "word": nf.to_word().to_text()})


def cmd_qp_expand(args, io: _Inputs) -> RunReport:
    f = qp.QuasipositiveFactorization.from_json(io.json(args.file))
    w = qp.expand(f)
    return RunReport("qp-expand", verdict="expanded",
                     details={"strands": w.strands, "word": w.to_text(), "bands": len(f.bands)})


def cmd_qp_surface(args, io: _Inputs) -> RunReport:
    f = qp.QuasipositiveFactorization.from_json(io.json(args.file))
    return RunReport("qp-surface", verdict="computed", details=qp.surface_type(f).to_json())


def cmd_qp_sum(args, io: _Inputs) -> RunReport:
    f = qp.QuasipositiveFactorization.from_json(io.json(args.f))
    g = qp.QuasipositiveFactorization.from_json(io.json(args.g))
    s = qp.boundary_sum(f, g)
    return RunReport("qp-sum", verdict="computed",
                     details={"factorization": s.to_json(), "surface": qp.surface_type(s).to_json()})


def cmd_pi1_simplify(args, io: _Inputs) -> RunReport:
    p = presentation.GroupPresentation.from_json(io.json(args.file))
    res = presentation.tietze_simplify(p, args.budget)
    verdict = presentation.is_infinite_cyclic_certificate(p, args.budget)
    return RunReport("pi1-simplify", verdict=verdict.value,
                     exit_code=0 if verdict is presentation.Pi1Verdict.CERTIFIED_Z else 1,
                     details={"presentation": res.presentation.to_json(), "steps": res.steps,
                              "budget_exhausted": res.exhausted,
                              "survivors": list(res.survivors)})


def cmd_abelianize(args, io: _Inputs) -> RunReport:
    p = presentation.GroupPresentation.from_json(io.json(args.file))
    return RunReport("abelianize", verdict="computed",
                     details=presentation.abelianization(p).to_json())


def cmd_subword_check(args, io: _Inputs) -> RunReport:
    p = presentation.GroupPresentation.from_json(io.json(args.file))
    cand = presentation.GroupWord(tuple(int(t) for t in args.candidate.replace(",", " ").split()))
    if p.generator_count != 2 or len(p.relators) != 1:
        verdict = presentation.SubwordVerdict.INAPPLICABLE
    else:
        verdict = presentation.weinbaum_subword_test(p.relators[0], cand)
    return RunReport("subword-check", verdict=verdict.value,
                     exit_code=0 if verdict is presentation.SubwordVerdict.NONTRIVIAL else 1,
                     details={"candidate": list(cand.letters)})


def _read_lattice(path: str, io: _Inputs):
    obj = io.json(path)
    # accept a stein-check report as well as a bare lattice file
    if isinstance(obj, dict) and obj.get("command") == "stein-check":
        obj = obj["details"]["lattice"]
    return lattice.lattice_from_json(obj)


def cmd_lattice_classes(args, io: _Inputs) -> RunReport:
    Q, _ = _read_lattice(args.file, io)
    classes = lattice.classes_of_square(Q, args.square)
    return RunReport("lattice-classes", verdict="found" if classes else "none",
                     exit_code=0 if classes else 1,
                     details={"square": args.square, "classes": [list(v) for v in classes]})


def _sphere_report(command: str, Q, c1, square: int, genus: int, extra=None) -> RunReport:
    rep = lattice.sphere_obstruction_report(Q, c1, square, genus)
    details = rep.to_json()
    if extra:
        details.update(extra)
    ok = rep.verdict is lattice.SphereVerdict.NO_SPHERE
    return RunReport(command, verdict=rep.verdict.value, exit_code=0 if ok else 1, details=details)


def cmd_lattice_sphere_check(args, io: _Inputs) -> RunReport:
    Q, c1 = _read_lattice(args.file, io)
    return _sphere_report("lattice-sphere-check", Q, c1, args.square, args.genus)


def _stein_details(d: stein.SteinHandleDiagram) -> dict:
    return {"components": [
        {"tb": stein.tb(c.counts), "rotation": stein.rotation(c.counts),
         "framing": c.framing, "parity_ok": stein.parity_ok(c.counts)}
        for c in d.components]}


def cmd_stein_check(args, io: _Inputs) -> RunReport:
    d = stein.SteinHandleDiagram.from_json(io.json(args.file))
    check = stein.validate_stein(d)
    details = _stein_details(d)
    details["violations"] = [v.to_json() for v in check.violations]
    if check.ok:
        Q, c1 = stein.to_lattice(d)
        details["lattice"] = lattice.lattice_to_json(Q, c1)
    return RunReport("stein-check", verdict=check.verdict, exit_code=0 if check.ok else 1,
                     details=details)


def cmd_no_sphere(args, io: _Inputs) -> RunReport:
    d = stein.SteinHandleDiagram.from_json(io.json(args.file))
    Q, c1 = stein.to_lattice(d)
    return _sphere_report("no-sphere", Q, c1, args.square, args.genus,
                          extra={"lattice": lattice.lattice_to_json(Q, c1)})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpkit", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--json", action="store_true",
                        help="print only the JSON report (no stderr summary)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *files, **extra):
        p = sub.add_parser(name)
        for f in files:
            p.add_argument(f)
        for flag, kw in extra.items():
            p.add_argument("--" + flag, **kw)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=fn)
        return p

    strands = {"type": int, "default": None}
    square = {"type": int, "default": -2}
    genus = {"type": int, "default": 0}
    add("equal", cmd_equal, "u", "v", strands=strands)
    add("normalize", cmd_normalize, "file", strands=strands)
    add("qp-expand", cmd_qp_expand, "file")
    add("qp-surface", cmd_qp_surface, "file")
    add("qp-sum", cmd_qp_sum, "f", "g")
    add("pi1-simplify", cmd_pi1_simplify, "file", budget={"type": int, "default": 100})
    add("abelianize", cmd_abelianize, "file")
    add("subword-check", cmd_subword_check, "file",
        candidate={"required": True, "help": "signed generator ids, e.g. '1 2'"})
    add("lattice-classes", cmd_lattice_classes, "file", square=square)
    add("lattice-sphere-check", cmd_lattice_sphere_check, "file", square=square, genus=genus)
    add("stein-check", cmd_stein_check, "file")
    add("no-sphere", cmd_no_sphere, "file", square=square, genus=genus)
    return parser


def run(argv=None) -> RunReport:
    args = build_parser().parse_args(argv)
    io = _Inputs()
    try:
        report = args.func(args, io)
    except (QPKitError, ValueError, KeyError, TypeError, OSError, UnicodeDecodeError) as exc:
        report = RunReport(args.command, verdict="input-error", exit_code=2,
                           details={"error": f"{type(exc).__name__}: {exc}"})
    report.inputs = io.records
    report.json_only = args.json
    return report


def main(argv=None) -> int:
    try:
        report = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return 2 if exc.code else 0
    print(report.to_json())
    if not report.json_only:
        print(f"{report.command}: {report.verdict}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
