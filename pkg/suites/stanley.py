"""Σ_Q q^maj(Q) / (1-q)...(1-q^n) against brute-force SsYT counts."""

import logging

from lab.polyq import series_from_counts
from lab.shapes import shape_to_text
from lab.tableaux import ssyt_counts, stanley_series
from suites.common import shapes_for
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "stanley"


def run(context) -> VerificationReport:
    N = context.series_degree
    report = VerificationReport(NAME, details={"max_cells": context.max_cells, "series_degree": N})
    with timed(report):
        for s in shapes_for(context, context.max_cells):
            case = shape_to_text(s)
            report.case(case)
            counts = series_from_counts(ssyt_counts(s, N))
            report.check(case, list(counts.coeffs), list(stanley_series(s, N).coeffs))
    return report
