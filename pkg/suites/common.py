"""Case selection shared by the suites."""

from __future__ import annotations

import json

from corpus import Case, cases_from_paths, random_corpus, shape_case, shape_cases, shape_corpus
from lab.poset import trivial_filter
from lab.shapes import SkewShape


def shapes_for(context, max_cells: int) -> list[SkewShape]:
    """The shape given on the command line, or every shape up to ``max_cells``."""
    if context.shape is not None:
        return [context.shape]
    return shape_corpus(max_cells)


def explicit_cases(context) -> list[Case] | None:
    if context.shape is None and not context.poset_paths:
        return None
    cases = [shape_case(context.shape)] if context.shape is not None else []
    return cases + cases_from_paths(context.poset_paths)


def filtered_cases(context) -> list[Case]:
    """Shape posets with their row filter and random posets with random filters.

    ``filter_kind == "trivial"`` swaps every filter for the one-floor filter;
    posets read without a filter get it too.
    """
    cases = explicit_cases(context)
    if cases is None:
        cases = shape_cases(context.max_cells) + random_corpus(
            context.random_posets, context.random_poset_size, context.seed
        )
    out = []
    for case in cases:
        if context.filter_kind == "trivial" or case.filter is None:
            case = case._replace(filter=trivial_filter(case.poset))
        out.append(case)
    return out


def tag(case_id: str, **extra) -> str:
    """Case id extended with the sub-case, still replayable."""
    parts = [case_id] + [f"{k}={json.dumps(v, separators=(',', ':'))}" for k, v in extra.items()]
    return " ".join(parts)
