"""Verification suites behind ``pedestal-lab verify``.

Each suite module exposes ``NAME`` and ``run(context) -> VerificationReport``.
"""

import logging

from lab.errors import UnknownSuite
from suites import (
    bijections,
    eigen,
    equidistribution,
    mahonian_row_filter,
    minimal_element,
    pedestal_independence,
    schuetzenberger,
    stanley,
)
from suites.report import VerificationReport

logger = logging.getLogger(__name__)

SUITES = {
    module.NAME: module
    for module in (
        stanley,
        equidistribution,
        mahonian_row_filter,
        schuetzenberger,
        pedestal_independence,
        bijections,
        minimal_element,
        eigen,
    )
}


def get_suite(name: str):
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None


def run_suite(name: str, context) -> VerificationReport:
    suite = get_suite(name)
    logger.info("running suite %s", name)
    return suite.run(context)
