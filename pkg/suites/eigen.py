"""Integer eigenvalues of pedestal matrices, certified, with structural checks.

Cases with more linear extensions than the bound are skipped and listed. For
a case that has reference data the eigenvalues and the permutation matching
the reference matrix are reported as well.
"""

import logging

from corpus import chain_antichain_corpus, load_reference, named_posets, random_corpus, shape_cases
from lab.poset import count_linear_extensions
from lab.specmat import check_eigenvalues, match_up_to_permutation, pedestal_matrix
from suites.common import explicit_cases
from suites.report import VerificationReport, timed

logger = logging.getLogger(__name__)

NAME = "eigen"


def _cases(context):
    cases = explicit_cases(context)
    if cases is not None:
        return cases
    return (
        shape_cases(context.eigen_max_cells)
        + chain_antichain_corpus(context.chain_max)
        + named_posets(context.corpus_dir)
        + random_corpus(context.random_posets, context.random_poset_size, context.seed)
    )


def _compare_reference(report: VerificationReport, case, result, entry: dict) -> dict:
    M = pedestal_matrix(case.poset, report.details["max_extensions"])
    perm = match_up_to_permutation(M, entry["exponents"])
    if perm is None:
        report.fail(case.case_id, "matrix equal to the reference up to permutation", "no permutation")
    expected = sorted(tuple(e["coeffs"]) for e in entry.get("eigenvalues", []))
    actual = sorted(e.coeffs for e in result.eigenvalues)
    report.check(case.case_id, [list(c) for c in expected], [list(c) for c in actual])
    return {
        "eigenvalues": result.to_json()["eigenvalues"],
        "reference_permutation": list(perm) if perm is not None else None,
    }


def run(context) -> VerificationReport:
    report = VerificationReport(NAME, details={
        "max_extensions": context.max_extensions,
        "max_cells": context.eigen_max_cells,
    })
    reference = load_reference(directory=context.corpus_dir)
    skipped = []
    explicit = context.shape is not None or bool(context.poset_paths)
    with timed(report):
        for case in _cases(context):
            if count_linear_extensions(case.poset) > context.max_extensions:
                skipped.append(case.case_id)
                continue
            report.case(case.case_id)
            check = check_eigenvalues(case.poset, context.max_extensions, context.eigen_base_points)
            if not check.passed:
                report.fail(case.case_id, "certified integer eigenvalues", check.problems)
                continue
            if case.case_id in reference:
                report.details[case.case_id] = _compare_reference(
                    report, case, check.result, reference[case.case_id]
                )
            elif explicit:
                report.details[case.case_id] = {"eigenvalues": check.result.to_json()["eigenvalues"]}
    report.details["skipped"] = skipped
    return report
