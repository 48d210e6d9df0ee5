"""Run the rule-based classifier against the enumeration oracle over a corpus.

Records are produced in manifest order regardless of worker count, and the
serialized reports carry no timing or host data, so repeated runs emit
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .central import DEFAULT_HOM_CAP, CentralAutReport, central_automorphism_count
from .criteria import MINIMAL, NOT_MINIMAL, UNDECIDED, Verdict, classify_report
from .errors import AbelianGroup, CentautError, EnumerationCapExceeded
from .groupio import Manifest, default_corpus, resolve_source
from .groups import DEFAULT_ORDER_CAP
from .structure import StructureReport, structure_report

REPORT_FORMATS = ("json", "csv", "table")


@dataclass
class AnalysisRecord:
    """Everything the harness learned about one manifest entry.

    seconds is wall time for the whole entry; it stays out of serialized
    reports so output is reproducible byte for byte.
    """

    name: str
    source: str
    status: str = "error"  # ok | skipped | error
    error: Optional[str] = None
    order: Optional[int] = None
    prime: Optional[int] = None
    structure: Optional[StructureReport] = None
    central: Optional[CentralAutReport] = None
    central_skipped: Optional[str] = None
    verdict: Optional[Verdict] = None
    agreement: Optional[bool] = None
    expected: Optional[str] = None
    expected_ok: Optional[bool] = None
    seconds: float = 0.0


def analyze_source(
    name: str,
    source: str,
    expected: Optional[str] = None,
    cap: int = DEFAULT_ORDER_CAP,
    hom_cap: int = DEFAULT_HOM_CAP,
    group=None,
) -> AnalysisRecord:
    """Build, classify and brute-force one group; never raises on group errors."""
    rec = AnalysisRecord(name=name, source=source, expected=expected)
    start = time.perf_counter()
    try:
        G = group if group is not None else resolve_source(source, cap=cap)
        rec.order = G.order
        rec.prime = G.prime
        rec.structure = structure_report(G)
        try:
            rec.verdict = classify_report(rec.structure)
        except AbelianGroup as e:
            rec.status = "skipped"
            rec.error = f"abelian group: {e}"
            return rec
        try:
            rec.central = central_automorphism_count(G, hom_cap=hom_cap)
        except EnumerationCapExceeded as e:
            rec.central_skipped = str(e)
        if rec.central is not None and rec.verdict.decision != UNDECIDED:
            rec.agreement = (rec.verdict.decision == MINIMAL) == rec.central.minimal
            rec.verdict = Verdict(
                rec.verdict.decision,
                rec.verdict.rule,
                rec.verdict.details,
                brute_force_agrees=rec.agreement,
            )
        if expected is not None and rec.verdict is not None:
            rec.expected_ok = rec.verdict.decision == expected
        rec.status = "ok"
    except CentautError as e:
        rec.status = "error"
        rec.error = f"{type(e).__name__}: {e}"
    finally:
        rec.seconds = time.perf_counter() - start
    return rec


def _worker(args: tuple) -> AnalysisRecord:
    name, source, expected, cap, hom_cap = args
    return analyze_source(name, source, expected, cap=cap, hom_cap=hom_cap)


@dataclass
class VerificationReport:
    records: list[AnalysisRecord]

    @property
    def summary(self) -> dict:
        s = {
            "entries": len(self.records),
            "minimal": 0,
            "notMinimal": 0,
            "undecided": 0,
            "mismatches": 0,
            "skipped": 0,
            "errors": 0,
            "expectationFailures": 0,
            "minimalClassGe3": 0,
        }
        for r in self.records:
            if r.status == "error":
                s["errors"] += 1
                continue
            if r.status == "skipped" or r.central_skipped is not None:
                s["skipped"] += 1
            if r.verdict is None:
                continue
            key = {MINIMAL: "minimal", NOT_MINIMAL: "notMinimal", UNDECIDED: "undecided"}
            s[key[r.verdict.decision]] += 1
            if r.agreement is False:
                s["mismatches"] += 1
            if r.expected_ok is False:
                s["expectationFailures"] += 1
            if (
                r.verdict.decision == MINIMAL
                and r.structure is not None
                and r.structure.nilpotency_class >= 3
            ):
                s["minimalClassGe3"] += 1
        return s

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["mismatches"] == 0 and s["expectationFailures"] == 0 and s["errors"] == 0


def run_verification(
    manifest: Optional[Manifest] = None,
    jobs: int = 1,
    cap: int = DEFAULT_ORDER_CAP,
    hom_cap: int = DEFAULT_HOM_CAP,
) -> VerificationReport:
    """Analyze every manifest entry, preserving manifest order in the output."""
    if manifest is None:
        manifest = default_corpus()
    tasks = [(e.name, e.source, e.expected, cap, hom_cap) for e in manifest.entries]
    if jobs <= 1 or len(tasks) <= 1:
        records = [_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_worker, tasks))
    return VerificationReport(records)


def _structure_dict(rep: StructureReport) -> dict:
    return {
        "class": rep.nilpotency_class,
        "coclass": rep.coclass,
        "d": rep.d,
        "dCenter": rep.d_center,
        "dInnerCenter": rep.d_inner_center,
        "abelianization": list(rep.abelianization.exponents),
        "center": list(rep.center.exponents),
        "innerCenter": list(rep.inner_center.exponents),
        "centerInDerived": rep.center_in_derived,
        "secondCenterAbelian": rep.second_center_abelian,
        "orderExp": rep.order_exp,
    }


def record_dict(rec: AnalysisRecord) -> dict:
    """JSON form of a record; excludes timing by design."""
    out: dict = {
        "name": rec.name,
        "source": rec.source,
        "status": rec.status,
        "error": rec.error,
        "order": rec.order,
        "prime": rec.prime,
        "structure": _structure_dict(rec.structure) if rec.structure else None,
        "central": None,
        "centralSkipped": rec.central_skipped,
        "verdict": None,
        "agreement": rec.agreement,
        "expected": rec.expected,
        "expectedOk": rec.expected_ok,
    }
    if rec.central is not None:
        out["central"] = {
            "homCandidates": rec.central.hom_candidates,
            "autCount": rec.central.aut_count,
            "zInnOrder": rec.central.z_inn_order,
            "minimal": rec.central.minimal,
        }
    if rec.verdict is not None:
        out["verdict"] = {
            "decision": rec.verdict.decision,
            "rule": rec.verdict.rule,
            "details": rec.verdict.details,
            "bruteForceAgrees": rec.verdict.brute_force_agrees,
        }
    return out


_CSV_FIELDS = (
    "name,source,status,order,prime,class,coclass,decision,rule,"
    "homCandidates,autCount,zInnOrder,agreement,expected,expectedOk,error"
).split(",")


def format_report(report: VerificationReport, fmt: str = "json") -> str:
    """Deterministic rendering; identical runs give identical bytes."""
    if fmt == "json":
        payload = {
            "format": "verification-report",
            "summary": report.summary,
            "records": [record_dict(r) for r in report.records],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in report.records:
            d = record_dict(r)
            row = {
                "name": d["name"],
                "source": d["source"],
                "status": d["status"],
                "order": d["order"],
                "prime": d["prime"],
                "class": d["structure"]["class"] if d["structure"] else None,
                "coclass": d["structure"]["coclass"] if d["structure"] else None,
                "decision": d["verdict"]["decision"] if d["verdict"] else None,
                "rule": d["verdict"]["rule"] if d["verdict"] else None,
                "homCandidates": d["central"]["homCandidates"] if d["central"] else None,
                "autCount": d["central"]["autCount"] if d["central"] else None,
                "zInnOrder": d["central"]["zInnOrder"] if d["central"] else None,
                "agreement": d["agreement"],
                "expected": d["expected"],
                "expectedOk": d["expectedOk"],
                "error": d["error"],
            }
            w.writerow({k: ("" if v is None else v) for k, v in row.items()})
        return buf.getvalue()
    if fmt == "table":
        head = f"{'name':<12} {'order':>6} {'cls':>3} {'cc':>3} {'decision':<11} {'rule':<12} {'aut':>8} {'zinn':>6} {'ok':<5}"
        lines = [head, "-" * len(head)]
        for r in report.records:
            cls = r.structure.nilpotency_class if r.structure else "-"
            cc = r.structure.coclass if r.structure else "-"
            dec = r.verdict.decision if r.verdict else "-"
            rule = r.verdict.rule if r.verdict else "-"
            aut = r.central.aut_count if r.central else "-"
            zinn = r.central.z_inn_order if r.central else "-"
            ok = {True: "yes", False: "NO", None: "-"}[r.agreement]
            lines.append(
                f"{r.name:<12} {r.order or '-':>6} {cls:>3} {cc:>3} {dec:<11} {rule:<12} {aut:>8} {zinn:>6} {ok:<5}"
            )
        s = report.summary
        lines.append("-" * len(head))
        lines.append(
            f"entries={s['entries']} minimal={s['minimal']} notMinimal={s['notMinimal']} "
            f"undecided={s['undecided']} mismatches={s['mismatches']} skipped={s['skipped']} "
            f"errors={s['errors']} expectationFailures={s['expectationFailures']}"
        )
        return "\n".join(lines) + "\n"
    raise ValueError(f"format must be one of {list(REPORT_FORMATS)}, got {fmt!r}")
