"""Command-line entry point: ``pedestal-lab <verb> [subverb] [options]``.

Results go to stdout as JSON (default) or text; diagnostics go to stderr.
Exit codes: 0 success, 1 a verification suite failed, 2 bad input.
"""

from __future__ import annotations

import logging
import sys
from typing import Sequence

import click
import yaml

from context import Context
from corpus import (
    Case,
    list_posets,
    load_poset,
    load_poset_document,
    load_reference,
    poset_case,
    remove_poset,
    save_poset,
    shape_case,
)
from lab.documents import load_document, render_json
from lab.errors import InputError, PedestalLabError, UnknownSuite
from lab.pedestal import ascent_data, pedestal, pedestal_polynomial
from lab.poset import (
    linear_extensions,
    semistandard_counts,
    trivial_filter,
    x_partition_counts,
)
from lab.polyq import IntPoly, TruncatedSeries, poly_to_json, poly_to_text, series_from_counts
from lab.rsk import Permutation, rsk, rsk_inverse, schuetzenberger
from lab.shapes import shape_parse
from lab.specmat import char_poly, eigen_polynomials, match_up_to_permutation, pedestal_matrix
from lab.tableaux import (
    descent_data,
    enumerate_syt,
    maj_polynomial,
    plinth,
    plinth_polynomial,
    ssyt_counts,
    stanley_series,
)
from settings import get_settings
from suites import SUITES, run_suite

logger = logging.getLogger(__name__)

# --max-cells feeds the suite's own cell bound where it has one
CELL_BOUNDS = {"eigen": "eigen_max_cells", "bijections": "bijection_max_cells"}


class LabGroup(click.Group):
    """Turns library input errors into exit code 2 with the message on stderr."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (InputError, UnknownSuite) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)
        except PedestalLabError as exc:
            click.echo(f"internal error: {exc}", err=True)
            ctx.exit(1)


def _settings(ctx: click.Context):
    return ctx.find_root().obj["settings"]


def _format(ctx: click.Context) -> str:
    return ctx.find_root().obj["format"]


def emit(ctx: click.Context, data, text: str | None = None) -> None:
    if _format(ctx) == "text" and text is not None:
        click.echo(text)
    else:
        click.echo(render_json(data))


def series_json(series: TruncatedSeries) -> dict:
    return {"coeffs": list(series.coeffs), "truncation_degree": series.truncation_degree}


def series_text(series: TruncatedSeries) -> str:
    return f"{poly_to_text(series.to_poly())} + O(q^{series.truncation_degree + 1})"


def _target(ctx: click.Context, shape: str | None, poset: str | None, filter_kind: str = "row") -> Case:
    """Exactly one of --shape / --poset, as a case with its filter resolved."""
    if (shape is None) == (poset is None):
        raise InputError("give exactly one of --shape or --poset")
    if shape is not None:
        case = shape_case(shape_parse(shape))
    else:
        case = poset_case(*load_poset(poset, _settings(ctx).corpus_dir))
    if filter_kind == "trivial" or case.filter is None:
        case = case._replace(filter=trivial_filter(case.poset))
    return case


def _shape(shape: str | None):
    if shape is None:
        raise InputError("--shape is required")
    return shape_parse(shape)


def _nth(items: list, k: int, what: str):
    if not 1 <= k <= len(items):
        raise InputError(f"{what} index {k} is out of range 1..{len(items)}")
    return items[k - 1]


def _override_format(ctx: click.Context, param, value):
    if value is not None:
        ctx.find_root().obj["format"] = value


# leaf commands accept --format after the verb as well
format_option = click.option(
    "--format", "output_format", type=click.Choice(["json", "text"]), default=None,
    expose_value=False, callback=_override_format, help="Overrides the group-level --format.",
)
shape_option = click.option("--shape", help="Skew shape such as 3,2 or 3,2/1.")
poset_option = click.option("--poset", help="Poset document path, or a name in the corpus directory.")
filter_option = click.option(
    "--filter", "filter_kind", type=click.Choice(["row", "trivial"]), default="row", show_default=True
)


@click.group(name="pedestal-lab", cls=LabGroup)
@click.option("--format", "output_format", type=click.Choice(["json", "text"]), default=None)
@click.option(
    "--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False), default=None
)
@click.pass_context
def main(ctx: click.Context, output_format: str | None, log_level: str | None):
    """Tableaux, pedestals and pedestal matrices over Z[q]."""
    settings = get_settings()
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    ctx.obj = {"settings": settings, "format": output_format or settings.output_format}


@main.group()
def syt():
    """Standard Young tableaux of a shape."""


@syt.command("count")
@format_option
@shape_option
@click.pass_context
def syt_count(ctx, shape):
    count = sum(1 for _ in enumerate_syt(_shape(shape)))
    emit(ctx, count, str(count))


@syt.command("list")
@format_option
@shape_option
@click.pass_context
def syt_list(ctx, shape):
    tableaux = list(enumerate_syt(_shape(shape)))
    text = "\n\n".join(_rows_text(Q.rows()) for Q in tableaux)
    emit(ctx, [Q.to_json() for Q in tableaux], text)


def _rows_text(rows) -> str:
    return "\n".join(" ".join("." if v is None else str(v) for v in row) for row in rows)


GF_KINDS = ["plinth", "maj", "ssyt", "stanley", "pedestal", "x-partitions", "semistandard"]


@main.command()
@format_option
@click.argument("kind", type=click.Choice(GF_KINDS))
@shape_option
@poset_option
@filter_option
@click.option("--series-degree", type=int, default=None)
@click.option("--reference", "reference_index", type=int, default=1, show_default=True)
@click.pass_context
def gf(ctx, kind, shape, poset, filter_kind, series_degree, reference_index):
    """Generating functions: polynomials exactly, series truncated at --series-degree."""
    N = series_degree if series_degree is not None else _settings(ctx).series_degree
    if N < 0:
        raise InputError("--series-degree must be non-negative")
    if kind in ("plinth", "maj", "ssyt", "stanley"):
        s = _shape(shape)
        if kind == "plinth":
            result: IntPoly | TruncatedSeries = plinth_polynomial(s)
        elif kind == "maj":
            result = maj_polynomial(s)
        elif kind == "ssyt":
            result = series_from_counts(ssyt_counts(s, N))
        else:
            result = stanley_series(s, N)
    else:
        case = _target(ctx, shape, poset, filter_kind)
        if kind == "pedestal":
            P = _nth(list(linear_extensions(case.poset)), reference_index, "reference")
            result = pedestal_polynomial(case.poset, P)
        elif kind == "x-partitions":
            result = series_from_counts(x_partition_counts(case.poset, N))
        else:
            result = series_from_counts(semistandard_counts(case.poset, case.filter, N))
    if isinstance(result, IntPoly):
        emit(ctx, poly_to_json(result), poly_to_text(result))
    else:
        emit(ctx, series_json(result), series_text(result))


@main.command("plinth")
@format_option
@shape_option
@click.pass_context
def plinth_command(ctx, shape):
    """Descents, maj and plinth of every SYT of the shape."""
    rows, lines = [], []
    for Q in enumerate_syt(_shape(shape)):
        data, base = descent_data(Q), plinth(Q)
        rows.append({
            "tableau": Q.rows(),
            "descents": sorted(data.descent_contents),
            "maj": data.maj,
            "plinth": base.rows(),
            "volume": base.volume,
        })
        lines.append(f"{Q.rows()} maj={data.maj} plinth={base.rows()} volume={base.volume}")
    emit(ctx, rows, "\n".join(lines))


@main.command("pedestal")
@format_option
@shape_option
@poset_option
@click.option("--reference", "reference_index", type=int, default=1, show_default=True)
@click.pass_context
def pedestal_command(ctx, shape, poset, reference_index):
    """Pedestals of every linear extension Q with respect to the K-th extension P."""
    case = _target(ctx, shape, poset)
    extensions = list(linear_extensions(case.poset))
    P = _nth(extensions, reference_index, "reference")
    items, lines = [], []
    for Q in extensions:
        d = pedestal(P, Q)
        ascents = sorted(ascent_data(P, Q).ascent_contents)
        items.append({"Q": Q.to_json(), "ascents": ascents, **d.to_json(), "volume": d.volume})
        lines.append(f"{list(Q.rank)} ascents={ascents} pedestal={list(d.base.values)} volume={d.volume}")
    G = pedestal_polynomial(case.poset, P)
    lines.append(f"G_P(q) = {poly_to_text(G)}")
    emit(ctx, {"reference": P.to_json(), "pedestals": items, "polynomial": poly_to_json(G)}, "\n".join(lines))


def _reference_permutation(ctx, case: Case, M):
    entry = load_reference(directory=_settings(ctx).corpus_dir).get(case.case_id)
    if entry is None:
        return None
    perm = match_up_to_permutation(M, entry["exponents"])
    return list(perm) if perm is not None else None


@main.command("matrix")
@format_option
@shape_option
@poset_option
@click.option("--max-extensions", type=int, default=None)
@click.pass_context
def matrix_command(ctx, shape, poset, max_extensions):
    """The pedestal matrix, rows and columns in canonical extension order."""
    case = _target(ctx, shape, poset)
    M = pedestal_matrix(case.poset, max_extensions or _settings(ctx).max_extensions)
    doc = M.to_json()
    perm = _reference_permutation(ctx, case, M)
    if perm is not None:
        doc["reference_permutation"] = perm
    text = "\n".join(" ".join(f"q^{e}" if e else "1" for e in row) for row in M.exponents)
    if perm is not None:
        text += f"\nreference permutation: {perm}"
    emit(ctx, doc, text)


@main.command("eigen")
@format_option
@shape_option
@poset_option
@click.option("--max-extensions", type=int, default=None)
@click.pass_context
def eigen_command(ctx, shape, poset, max_extensions):
    """Characteristic polynomial and certified eigenvalues in Z[q]."""
    settings = _settings(ctx)
    case = _target(ctx, shape, poset)
    M = pedestal_matrix(case.poset, max_extensions or settings.max_extensions)
    chi = char_poly(M)
    result = eigen_polynomials(M, chi, settings.eigen_base_points)
    doc = {"char_poly": chi.to_json(), **result.to_json()}
    emit(ctx, doc, f"char poly: {chi}\n" + "\n".join(result.display))


@main.group("rsk")
def rsk_group():
    """Robinson–Schensted correspondence and the Schützenberger involution."""


@rsk_group.command("insert")
@format_option
@click.option("--word", required=True, help="Permutation in one-line notation, e.g. 2,3,1.")
@click.pass_context
def rsk_insert(ctx, word):
    P, Q = rsk(Permutation.parse(word))
    emit(ctx, {"P": P.rows(), "Q": Q.rows()}, f"P:\n{_rows_text(P.rows())}\nQ:\n{_rows_text(Q.rows())}")


@rsk_group.command("inverse")
@format_option
@shape_option
@click.option("--p-index", type=int, required=True)
@click.option("--q-index", type=int, required=True)
@click.pass_context
def rsk_inverse_command(ctx, shape, p_index, q_index):
    tableaux = list(enumerate_syt(_shape(shape)))
    sigma = rsk_inverse(_nth(tableaux, p_index, "P"), _nth(tableaux, q_index, "Q"))
    emit(ctx, sigma.to_json(), str(sigma))


@rsk_group.command("schuetzenberger")
@format_option
@shape_option
@click.pass_context
def rsk_schuetzenberger(ctx, shape):
    items, lines = [], []
    for Q in enumerate_syt(_shape(shape)):
        S = schuetzenberger(Q)
        maj, volume = descent_data(Q).maj, plinth(S).volume
        items.append({"Q": Q.rows(), "sch": S.rows(), "maj": maj, "plinth_volume": volume})
        lines.append(f"{Q.rows()} -> {S.rows()} maj={maj} plinth={volume}")
    emit(ctx, items, "\n".join(lines))


@main.command()
@format_option
@click.argument("suite")
@shape_option
@click.option("--poset", "posets", multiple=True, help="Poset document or directory; repeatable.")
@filter_option
@click.option("--series-degree", type=int, default=None)
@click.option("--max-cells", type=int, default=None)
@click.option("--max-extensions", type=int, default=None)
@click.option("--max-volume", type=int, default=None)
@click.option("--semistandard-volume", type=int, default=None)
@click.option("--random-posets", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.pass_context
def verify(ctx, suite, shape, posets, filter_kind, max_cells, **bounds):
    """Run a verification suite; exit 1 when any case fails."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if any(v is not None and v < 0 for k, v in bounds.items() if k != "seed") or (max_cells or 0) < 0:
        raise InputError("bounds must be non-negative")
    if max_cells is not None:
        bounds[CELL_BOUNDS.get(suite, "max_cells")] = max_cells
    context = Context.from_settings(
        _settings(ctx),
        shape=shape_parse(shape) if shape is not None else None,
        poset_paths=list(posets),
        filter_kind=filter_kind,
        **bounds,
    )
    report = run_suite(suite, context)
    emit(ctx, report.to_json(), report.to_text())
    if not report.passed:
        ctx.exit(1)


@main.group("corpus")
def corpus_group():
    """Named poset documents in the corpus directory."""


@corpus_group.command("list")
@format_option
@click.pass_context
def corpus_list(ctx):
    names = list_posets(_settings(ctx).corpus_dir)
    emit(ctx, names, "\n".join(names))


@corpus_group.command("show")
@format_option
@click.argument("name")
@click.pass_context
def corpus_show(ctx, name):
    doc = load_poset_document(name, _settings(ctx).corpus_dir)
    emit(ctx, doc, yaml.safe_dump(doc, sort_keys=False, allow_unicode=True).rstrip())


@corpus_group.command("add")
@format_option
@click.argument("name")
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_context
def corpus_add(ctx, name, path):
    """Validate a poset document and store it under NAME."""
    saved = save_poset(name, load_document(path), _settings(ctx).corpus_dir)
    emit(ctx, {"saved": str(saved)}, f"saved {saved}")


@corpus_group.command("remove")
@format_option
@click.argument("name")
@click.pass_context
def corpus_remove(ctx, name):
    remove_poset(name, _settings(ctx).corpus_dir)
    emit(ctx, {"removed": name}, f"removed {name}")


def run_command(argv: Sequence[str] | None = None) -> int:
    """Run the CLI in-process and return its exit code."""
    try:
        rv = main.main(args=list(argv) if argv is not None else None, prog_name="pedestal-lab", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    main()
