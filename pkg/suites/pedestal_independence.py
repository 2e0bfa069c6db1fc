"""G_P(q) does not depend on the reference extension P."""

import logging

from corpus import poset_cases
from lab.pedestal import pedestal_polynomials
from lab.polyq import poly_to_json
from suites.common import tag
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "pedestal-independence"


def run(context) -> VerificationReport:
    report = VerificationReport(NAME)
    with timed(report):
        for case in poset_cases(context):
            report.case(case.case_id)
            polys = pedestal_polynomials(case.poset)
            expected = polys[0][1]
            for P, poly in polys[1:]:
                if poly != expected:
                    report.fail(tag(case.case_id, P=P.to_json()), poly_to_json(expected), poly_to_json(poly))
    return report
