"""Pedestal statistics under the row filter against maj.

For every reference P the multiset {|d_P(Q)| + |t|} must equal {maj(Q)}, and
q^|t| G_P(q) / (1-q)...(1-q^n) must equal the SsYT count series. Both need
the shape to be shift-compatible with its row filter; on the other shapes
only the coefficientwise bound SsYT ≥ q^|t| G_X holds and is what gets checked.
"""

import logging
from collections import Counter

from lab.pedestal import pedestal_statistics, semistandard_polynomial_via_pedestals
from lab.poset import linear_extensions, poset_from_skew_shape, row_filter, shift_compatible
from lab.polyq import series_rational
from lab.shapes import shape_to_text
from lab.tableaux import descent_data, enumerate_syt, maj_polynomial, ssyt_counts
from suites.common import shapes_for, tag
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "mahonian-row-filter"


def run(context) -> VerificationReport:
    N = context.series_degree
    report = VerificationReport(NAME, details={"max_cells": context.max_cells, "series_degree": N})
    incompatible = []
    with timed(report):
        for s in shapes_for(context, context.max_cells):
            case = shape_to_text(s)
            p, f = poset_from_skew_shape(s), row_filter(s)
            majs = sorted(Counter(descent_data(Q).maj for Q in enumerate_syt(s)).elements())
            counts = list(ssyt_counts(s, N))
            maj_series = list(series_rational(maj_polynomial(s), range(1, p.n + 1), N).coeffs)
            compatible = shift_compatible(p, f)
            if not compatible:
                incompatible.append(case)
            for P in linear_extensions(p):
                sub = tag(case, P=list(P.rank))
                report.case(sub)
                via = list(semistandard_polynomial_via_pedestals(p, f, P, N).coeffs)
                if compatible:
                    report.check(sub, majs, sorted(pedestal_statistics(p, f, P).elements()))
                    report.check(sub, counts, via)
                    continue
                for name, series in (("SsYT counts", counts), ("maj series", maj_series)):
                    if any(a < b for a, b in zip(series, via)):
                        report.fail(sub, f"{name} ≥ {via}", series)
    report.details["shift_incompatible"] = incompatible
    return report
