"""Exhaustive checks of B^Ss and b_St up to a volume bound.

Every image is checked for volume, inverted, and collected; the collected
images must then be exactly the SsYT (resp. X-partitions) of bounded volume.
b_St is checked once for every reference extension P.
"""

import logging

from corpus import poset_cases
from lab.errors import InternalInvariantViolation
from lab.pedestal import bst_forward, bst_inverse, pedestal_volume
from lab.poset import iter_weak_sequences, iter_x_partitions, linear_extensions
from lab.shapes import shape_to_text
from lab.tableaux import bss_forward, bss_inverse, enumerate_syt, iter_ssyt, plinth
from suites.common import shapes_for, tag
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "bijections"


def _check_bss(report: VerificationReport, s, N: int) -> None:
    case = shape_to_text(s)
    report.case(case)
    images = {}
    for Q in enumerate_syt(s):
        base = plinth(Q).volume
        for Y in iter_weak_sequences(Q.size, N - base):
            sub = tag(case, Q=Q.rows(), Y=list(Y))
            T = bss_forward(Q, Y)
            report.check(sub, base + sum(Y), T.volume)
            if T.entries in images:
                report.fail(sub, "injective", f"same image as {images[T.entries]}")
            images[T.entries] = sub
            try:
                back = bss_inverse(T)
            except InternalInvariantViolation as exc:
                report.fail(sub, (Q.rows(), list(Y)), str(exc))
                continue
            report.check(sub, (Q.rows(), list(Y)), (back[0].rows(), list(back[1])))
    for T in iter_ssyt(s, N):
        if T.entries not in images:
            report.fail(tag(case, T=T.rows()), "in the image", "missed")


def _check_bst(report: VerificationReport, case_id: str, p, N: int) -> None:
    extensions = list(linear_extensions(p))
    for P in extensions:
        case = tag(case_id, P=list(P.rank))
        report.case(case)
        images = {}
        for Q in extensions:
            base = pedestal_volume(P, Q)
            if (base == 0) != (Q.rank == P.rank):
                report.fail(tag(case, Q=list(Q.rank)), "zero pedestal only at Q = P", base)
            for Y in iter_weak_sequences(p.n, N - base):
                sub = tag(case, Q=list(Q.rank), Y=list(Y))
                T = bst_forward(P, Q, Y)
                report.check(sub, base + sum(Y), T.volume)
                if T.values in images:
                    report.fail(sub, "injective", f"same image as {images[T.values]}")
                images[T.values] = sub
                try:
                    back_Q, back_Y = bst_inverse(P, T)
                except InternalInvariantViolation as exc:
                    report.fail(sub, (list(Q.rank), list(Y)), str(exc))
                    continue
                report.check(sub, (list(Q.rank), list(Y)), (list(back_Q.rank), list(back_Y)))
        for T in iter_x_partitions(p, N):
            if T.values not in images:
                report.fail(tag(case, T=list(T.values)), "in the image", "missed")


def run(context) -> VerificationReport:
    bound, N = context.bijection_max_cells, context.max_volume
    report = VerificationReport(NAME, details={"max_cells": bound, "max_volume": N})
    with timed(report):
        for s in shapes_for(context, bound):
            _check_bss(report, s, N)
        for case in poset_cases(context):
            if case.poset.n > bound and context.shape is None and not context.poset_paths:
                continue
            _check_bst(report, case.case_id, case.poset, N)
    return report
