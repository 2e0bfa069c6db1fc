"""maj and plinth volume have the same distribution over SYT(λ/μ)."""

import logging
from collections import Counter

from lab.shapes import shape_to_text
from lab.tableaux import descent_data, enumerate_syt, plinth
from suites.common import shapes_for
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "equidistribution"


def run(context) -> VerificationReport:
    report = VerificationReport(NAME, details={"max_cells": context.max_cells})
    with timed(report):
        for s in shapes_for(context, context.max_cells):
            case = shape_to_text(s)
            report.case(case)
            majs, volumes = Counter(), Counter()
            for Q in enumerate_syt(s):
                majs[descent_data(Q).maj] += 1
                volumes[plinth(Q).volume] += 1
            report.check(case, sorted(majs.elements()), sorted(volumes.elements()))
    return report
