"""Drive every bundled inequality suite and summarize the records.

Equivalent to `linext verify all --corpus builtin --random 20`, but kept
as a script so the records are in hand for further slicing.
"""

from collections import Counter

from linext import run_suite
from linext.checks import SUITES

total = 0
failures = []
by_kind: Counter[str] = Counter()
for suite in SUITES:
    records = run_suite(suite, corpus="builtin", count=20, nmax=7, seed=3)
    total += len(records)
    by_kind.update(r.kind for r in records)
    failures += [r for r in records if not r.holds]
    worst = min(
        (r for r in records if r.lhs is not None and r.rhs is not None),
        key=lambda r: r.lhs - r.rhs,
        default=None,
    )
    slack = "" if worst is None else f"  tightest: {worst.check} at {worst.instance}"
    print(f"{suite:<12} {len(records):>5} records{slack}")

print()
print(total, "records:", dict(by_kind))
for r in failures:
    tag = "finding" if r.kind == "conjecture" else "FAILURE"
    print(f"{tag}: {r.check} on {r.instance}: {r.lhs} vs {r.rhs} ({r.note})")
if not failures:
    print("every theorem, identity, and window held; no conjecture findings")
