#!/usr/bin/env python3
"""
Verifying the classifier against enumeration, corpus-wide
==========================================================

The bundled corpus pins an expected verdict for every group.  The harness
classifies each one, enumerates the candidate maps independently, and
reports any disagreement.  Output is deterministic: same manifest, same
bytes, regardless of worker count.
"""

from centaut import default_corpus, format_report, run_verification

manifest = default_corpus()
print(f"corpus: {len(manifest.entries)} groups, e.g.")
for e in manifest.entries[:5]:
    print(f"  {e.name:18s} {e.source:28s} expected {e.expected}")

report = run_verification(manifest, jobs=4)
s = report.summary
print(
    f"\n{s['entries']} analyzed: {s['minimal']} minimal, "
    f"{s['notMinimal']} not, {s['undecided']} undecided, "
    f"{s['errors']} errors, {s['skipped']} skipped"
)
print("classifier/enumeration mismatches:", s["mismatches"])
print("all expectations met:", report.ok)
assert report.ok and s["mismatches"] == 0

# Records where the primary rule had company list the cross-checks too.
multi = [r for r in report.records if "cross-checks" in r.verdict.details]
print(f"\n{len(multi)} groups matched more than one rule; none conflict:")
for r in multi[:4]:
    print(f"  {r.name}: {r.verdict.rule}; {r.verdict.details.split('; ', 1)[1]}")
assert not any("(CONFLICT)" in r.verdict.details for r in multi)

again = run_verification(manifest, jobs=1)
assert format_report(report, "csv") == format_report(again, "csv")
print("\njobs=4 and jobs=1 render byte-identically")

print("\nfirst rows of the table view:")
print("\n".join(format_report(report, "table").splitlines()[:10]))
