"""The minimal semistandard element t_{X,F}.

t must be semistandard and below every semistandard X-partition, and the
semistandard series starts with exactly q^|t|. Subtracting t is a bijection
onto X-partitions only on shift-compatible cases, where the counts must agree
after shifting by |t|; elsewhere adding t is still injective, so the
semistandard counts dominate the shifted ones.
"""

import logging

from lab.poset import (
    is_semistandard,
    iter_x_partitions,
    minimal_semistandard,
    semistandard_counts,
    shift_compatible,
    x_partition_counts,
)
from suites.common import filtered_cases, tag
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "minimal-element"


def run(context) -> VerificationReport:
    N = context.semistandard_volume
    report = VerificationReport(NAME, details={"max_volume": N, "filter": context.filter_kind})
    incompatible = []
    with timed(report):
        for case in filtered_cases(context):
            p, f = case.poset, case.filter
            cid = tag(case.case_id, filter=list(f.floors))
            report.case(cid)
            t = minimal_semistandard(p, f)
            if not is_semistandard(p, f, t):
                report.fail(cid, "t is semistandard", list(t.values))
            for T in iter_x_partitions(p, N, f):
                if not t.below(T):
                    report.fail(tag(cid, T=list(T.values)), f"≥ {list(t.values)}", list(T.values))
            if t.volume > N:
                continue
            counts = semistandard_counts(p, f, N)
            first = next(d for d, c in enumerate(counts) if c)
            report.check(cid, (t.volume, 1), (first, counts[first]))
            shifted = [0] * t.volume + x_partition_counts(p, N - t.volume)
            if shift_compatible(p, f):
                report.check(cid, shifted, counts)
            else:
                incompatible.append(cid)
                if any(a < b for a, b in zip(counts, shifted)):
                    report.fail(cid, f"coefficientwise ≥ {shifted}", counts)
    report.details["shift_incompatible"] = incompatible
    return report
