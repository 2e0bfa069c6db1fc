"""Schützenberger involution on straight shapes, plus the RSK round trip."""

import logging

from lab.errors import SkewNotSupported
from lab.rsk import permutations_of, rsk, rsk_inverse, schuetzenberger
from lab.shapes import shape_to_text
from lab.tableaux import descent_data, enumerate_syt, plinth
from suites.common import shapes_for, tag
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "schuetzenberger"


def _straight_shapes(context):
    shapes = shapes_for(context, context.max_cells)
    if context.shape is not None and not context.shape.is_straight:
        raise SkewNotSupported(f"shape {context.shape} is skew; only straight shapes are supported")
    return [s for s in shapes if s.is_straight]


def run(context) -> VerificationReport:
    report = VerificationReport(NAME, details={"max_cells": context.max_cells})
    with timed(report):
        for s in _straight_shapes(context):
            tableaux = list(enumerate_syt(s))
            for Q in tableaux:
                case = tag(shape_to_text(s), Q=Q.rows())
                report.case(case)
                S = schuetzenberger(Q)
                report.check(case, descent_data(Q).maj, plinth(S).volume)
                report.check(case, Q.rows(), schuetzenberger(S).rows())
                for aux in tableaux[1:]:
                    other = schuetzenberger(Q, aux)
                    if other != S:
                        report.fail(tag(case, P=aux.rows()), S.rows(), other.rows())

        n_max = context.shape.size if context.shape is not None else context.max_cells
        for n in range(1, n_max + 1):
            for sigma in permutations_of(n):
                case = str(sigma)
                report.case(case)
                P, Q = rsk(sigma)
                report.check(case, sigma.to_json(), rsk_inverse(P, Q).to_json())
    return report
