"""The ten gate checks for the whole package.

Each test evaluates one acceptance criterion end to end and prints a single
PASS/FAIL line straight to the real stdout (bypassing capture) so the gate
status is always visible in the pytest run.
"""

from __future__ import annotations

import itertools
import sys

import numpy as np

from centaut.abelian import (
    abelian_basis,
    abelian_invariants,
    embeds_invariants,
    hom_count_by_targets,
    hom_invariants,
)
from centaut.central import (
    adney_yen_check,
    all_automorphisms,
    central_automorphism_count,
    is_central_automorphism,
    iter_central_automorphisms,
    stability_count,
)
from centaut.families import abelian_group, cyclic, elementary
from centaut.groupio import default_corpus
from centaut.harness import REPORT_FORMATS, format_report, run_verification
from centaut.structure import (
    Subgroup,
    abelianization,
    center,
    central_series,
    closure,
    derived_subgroup,
    frattini_subgroup,
    quotient,
    socle_of,
)

import oracles


def gate(capsys, num: int, ok: bool, text: str) -> None:
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {text}"
    with capsys.disabled():
        print(line, flush=True)
    assert ok, line


def test_criterion_01_oracle_equivalence(capsys, corpus_run, corpus_groups):
    report, seconds = corpus_run
    n = len(report.records)
    primes = {G.prime for G in corpus_groups.values()}
    agree = sum(r.agreement is True for r in report.records)
    shape_ok = (
        n >= 40
        and primes == {2, 3, 5}
        and max(G.order for G in corpus_groups.values()) <= 2187
    )
    ok = (
        shape_ok
        and agree == n
        and report.summary["mismatches"] == 0
        and seconds <= 300.0
    )
    gate(
        capsys,
        1,
        ok,
        f"classifier vs enumeration oracle: {agree}/{n} agree, "
        f"0 mismatches required, primes {sorted(primes)}, {seconds:.1f}s",
    )


def test_criterion_02_stability_count_identity(capsys, corpus_groups):
    tried = failures = 0
    for name, G in corpus_groups.items():
        z = center(G)
        subgroups = {
            "derived": derived_subgroup(G),
            "frattini": frattini_subgroup(G),
            "second center": central_series(G, "upper")[2],
        }
        for xname, X in subgroups.items():
            meet = Subgroup(G, sorted(set(z.elements) & set(X.elements)), verify=False)
            for Y in (meet, socle_of(meet)):
                count, hom_order = stability_count(G, X, Y)
                tried += 1
                if count != hom_order:
                    failures += 1
    ok = failures == 0 and tried == 6 * len(corpus_groups)
    gate(capsys, 2, ok, f"stability maps == hom count on {tried} (G, X, Y) triples, {failures} failures")


def test_criterion_03_adney_yen_identity(capsys, corpus_groups, corpus_structures):
    checked = failures = 0
    for name, G in corpus_groups.items():
        if corpus_structures[name].center.rank != 1:
            continue
        aut, hom, equal = adney_yen_check(G)
        checked += 1
        if not equal:
            failures += 1
    ok = failures == 0 and checked >= 20
    gate(capsys, 3, ok, f"aut count == |Hom(G/G', Z)| on {checked} cyclic-center groups, {failures} failures")


def test_criterion_04_minimality_necessary_conditions(capsys, corpus_run):
    report, _ = corpus_run
    minimal = [r for r in report.records if r.central.minimal]
    bad = [
        r.name
        for r in minimal
        if not (
            r.structure.center_in_derived
            and r.structure.inner_center.rank >= 2
            and r.structure.d * r.structure.d_center == r.structure.d_inner_center
        )
    ]
    ok = not bad and len(minimal) >= 10
    gate(
        capsys,
        4,
        ok,
        f"all {len(minimal)} enumeration-minimal groups have Z<=G', "
        f"noncyclic Z2/Z and d*d(Z)==d(Z2/Z); exceptions: {bad or 'none'}",
    )


def test_criterion_05_central_section_embedding(capsys, corpus_groups):
    checked = failures = 0
    for name, G in corpus_groups.items():
        z = center(G)
        z2 = central_series(G, "upper")[2]
        gamma = abelian_invariants(z.as_group(), prime=G.prime)
        seen = set()
        for x in z2.elements:
            A = closure(G, [*z.elements, x])
            if A.elements in seen:
                continue
            seen.add(A.elements)
            Q, _ = quotient(G, A)
            qab, _ = abelianization(Q)
            Ag = A.as_group()
            z_inside = Subgroup(Ag, A.positions(z.elements), verify=False)
            a_over_z, _ = quotient(Ag, z_inside)
            checked += 1
            fits = embeds_invariants(
                abelian_invariants(a_over_z, prime=G.prime),
                hom_invariants(abelian_invariants(qab, prime=G.prime), gamma),
            )
            if not fits:
                failures += 1
    ok = failures == 0 and checked >= len(corpus_groups)
    gate(capsys, 5, ok, f"A/Z embeds in Hom(G/A, Z) for {checked} sections <Z, x>, {failures} failures")


def test_criterion_06_exponent_bound(capsys, corpus_structures):
    bad = [
        name
        for name, rep in corpus_structures.items()
        if rep.inner_center.exponent_log > rep.center.exponent_log
    ]
    gate(capsys, 6, not bad, f"exp(Z2/Z) <= exp(Z) across {len(corpus_structures)} groups; exceptions: {bad or 'none'}")


def test_criterion_07_named_values(capsys, corpus_run):
    recs = {r.name: r for r in corpus_run[0].records}
    q8, d16, heis4, d16xc2 = recs["q8"], recs["d16"], recs["heis4"], recs["d16xc2"]
    c4 = central_automorphism_count(cyclic(4))
    checks = {
        "Q8 4==4 minimal": q8.central.aut_count == 4 == q8.central.z_inn_order
        and q8.verdict.decision == "Minimal",
        "D16 4>2 not minimal": d16.central.aut_count == 4
        and d16.central.z_inn_order == 2
        and d16.verdict.decision == "NotMinimal",
        "heisenberg(2,2) minimal via class-2 rule": heis4.verdict.rule == "Class2"
        and heis4.verdict.decision == "Minimal"
        and heis4.central.minimal,
        "D16 x C2 not minimal": d16xc2.verdict.decision == "NotMinimal"
        and not d16xc2.central.minimal,
        "C4: 2 of 4 candidates bijective": (c4.hom_candidates, c4.aut_count) == (4, 2),
    }
    bad = [k for k, v in checks.items() if not v]
    gate(capsys, 7, not bad, f"named pinned values; failed: {bad or 'none'}")


def test_criterion_08_hom_oracle(capsys):
    small_a = [
        cyclic(2),
        cyclic(4),
        cyclic(8),
        elementary(2, 2),
        elementary(2, 3),
        abelian_group(2, [2, 1]),
        cyclic(3),
        cyclic(5),
        cyclic(7),
    ]
    small_b = [cyclic(2), cyclic(4), elementary(2, 2), cyclic(3)]
    checked = failures = 0
    for A, B in itertools.product(small_a, small_b):
        if A.prime != B.prime:
            continue
        formula = hom_invariants(abelian_invariants(A), abelian_invariants(B)).order
        counted = hom_count_by_targets(abelian_basis(A), B, range(B.order))
        raw = oracles.ref_hom_count(A.table.tolist(), B.table.tolist())
        checked += 1
        if not (formula == counted == raw):
            failures += 1
    ok = failures == 0 and checked >= 15
    gate(capsys, 8, ok, f"|Hom| formula == enumeration == raw function scan on {checked} pairs, {failures} failures")


def test_criterion_09_small_scale_completeness(capsys, corpus_groups, corpus_run):
    recs = {r.name: r for r in corpus_run[0].records}
    checked = failures = 0
    for name, G in corpus_groups.items():
        if G.order > 16:
            continue
        full = all_automorphisms(G)
        central_subset = {
            a.tobytes() for a in full if is_central_automorphism(G, a)
        }
        sigma_f = {
            s.astype(full[0].dtype).tobytes() for s in iter_central_automorphisms(G)
        }
        checked += 1
        if central_subset != sigma_f or len(sigma_f) != recs[name].central.aut_count:
            failures += 1
    ok = failures == 0 and checked >= 8
    gate(
        capsys,
        9,
        ok,
        f"sigma_f enumeration == filtered full automorphism search on "
        f"{checked} groups of order <= 16, {failures} failures",
    )


def test_criterion_10_deterministic_reports(capsys, corpus_run):
    report2, _ = corpus_run  # jobs=2
    report4 = run_verification(default_corpus(), jobs=4)
    diffs = [
        fmt
        for fmt in REPORT_FORMATS
        if format_report(report2, fmt) != format_report(report4, fmt)
    ]
    gate(capsys, 10, not diffs, f"byte-identical reports across jobs settings; differing formats: {diffs or 'none'}")
