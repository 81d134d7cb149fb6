"""Comparison tables and sweeps over the witness-scaled family instances.

Each row fixes (family, K, N1) and one scale value x (so N2 = x^2*K and
J = x*K) and collects seven quantities:

    1. exact modularity of the natural clustering
    2. its closed form (family G: equal to row 1; family H: strict upper bound)
    3. the threshold 1 - 1/(2K)
    4. the threshold 1 - 4/(Kx)
    5. the closed-form lower bound for the balanced clustering
    6. exact modularity of the balanced clustering
    7. relation-Jaccard similarity between the two clusterings

For x large enough rows 1..6 form a nondecreasing chain; rows report where
the chain breaks.  All values are exact rationals; rendering rounds to
four decimals, half away from zero.
"""

from __future__ import annotations

import csv
import io as _io
from dataclasses import dataclass
from fractions import Fraction

from .bounds import BoundSet, bound_set, sufficient_condition
from .errors import MalformedInputError
from .families import (
    FamilyParams,
    balanced_clustering,
    build_graph,
    natural_clustering,
    witness_params,
)
from .quality import modularity_exact, relation_jaccard_exact

TABLE_DEFAULTS = {1: ("G", (4, 6, 8, 10)), 2: ("H", (6, 8, 10))}

VALUE_COLUMNS = (
    "qn_natural",
    "closed_form",
    "half_k",
    "four_kx",
    "balanced_lower",
    "qn_balanced",
    "similarity",
)


def format_fixed(value: Fraction, places: int = 4) -> str:
    """Fixed-point decimal string, rounding halves away from zero."""
    scale = 10**places
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    whole, rem = divmod(num * scale, den)
    if 2 * rem >= den:
        whole += 1
    digits = f"{whole:0{places + 1}d}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


@dataclass(frozen=True)
class TableRow:
    family: str
    k: int
    n1: int
    n2: int
    j: int
    x: int
    n: int
    m: int
    values: tuple[Fraction, ...]  # the seven quantities, in display order

    @property
    def chain_breaks(self) -> tuple[int, ...]:
        """1-based positions i (among rows 1..5) where value i exceeds value i+1."""
        return tuple(
            i + 1 for i in range(5) if self.values[i] > self.values[i + 1]
        )

    @property
    def chain_ok(self) -> bool:
        return not self.chain_breaks


def comparison_row(family: str, k: int, x: int, n1: int | None = None) -> TableRow:
    """Evaluate the seven quantities for one scaled instance."""
    params, j = witness_params(k, x, family)
    if n1 is not None and n1 != params.n1:
        params = FamilyParams(family, k, n1, params.n2)
    g = build_graph(params)
    natural = natural_clustering(params)
    balanced = balanced_clustering(params.n, j)
    bounds = bound_set(family, k, params.n1, params.n2, j, x)
    values = (
        modularity_exact(g, natural),
        bounds.natural,
        bounds.half_k,
        bounds.four_kx,
        bounds.balanced_lower,
        modularity_exact(g, balanced),
        relation_jaccard_exact(natural, balanced),
    )
    return TableRow(
        family=family,
        k=k,
        n1=params.n1,
        n2=params.n2,
        j=j,
        x=x,
        n=params.n,
        m=g.m,
        values=values,
    )


def table_rows(
    table: int, xs: tuple[int, ...] | None = None, k: int = 3, n1: int | None = None
) -> list[TableRow]:
    """Rows for one of the two built-in reference grids (1: family G, 2: family H)."""
    if table not in TABLE_DEFAULTS:
        raise MalformedInputError(f"table must be 1 or 2, got {table}")
    family, default_xs = TABLE_DEFAULTS[table]
    xs = tuple(xs) if xs else default_xs
    if any(x < 2 for x in xs):
        raise MalformedInputError(f"scale values must be >= 2, got {xs}")
    return [comparison_row(family, k, x, n1) for x in sorted(xs)]


def table_csv(rows: list[TableRow]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["family", "K", "N1", "N2", "J", "x", "n", "m"]
    header += list(VALUE_COLUMNS)
    header += ["chain_ok", "chain_break"]
    header += [f"{name}_exact" for name in VALUE_COLUMNS]
    writer.writerow(header)
    for row in rows:
        breaks = ";".join(f"{i}-{i + 1}" for i in row.chain_breaks)
        record = [row.family, row.k, row.n1, row.n2, row.j, row.x, row.n, row.m]
        record += [format_fixed(v) for v in row.values]
        record += [str(row.chain_ok).lower(), breaks]
        record += [str(v) for v in row.values]
        writer.writerow(record)
    return buf.getvalue()


@dataclass(frozen=True)
class SweepRow:
    family: str
    k: int
    x: int
    n1: int
    n2: int
    j: int
    n: int
    m: int
    qn_natural: Fraction
    qn_balanced: Fraction
    similarity: Fraction
    bounds: BoundSet
    sufficient: bool
    chain_ok: bool
    epsilon: Fraction | None = None

    @property
    def natural_below_half_k(self) -> bool:
        return self.qn_natural < self.bounds.half_k

    @property
    def balanced_above_half_k(self) -> bool:
        return self.qn_balanced > self.bounds.half_k

    @property
    def balanced_beats_natural(self) -> bool:
        return self.qn_balanced > self.qn_natural

    @property
    def balanced_above_target(self) -> bool | None:
        if self.epsilon is None:
            return None
        return self.qn_balanced > 1 - self.epsilon

    @property
    def similarity_below_eps(self) -> bool | None:
        if self.epsilon is None:
            return None
        return self.similarity < self.epsilon

    @property
    def witness_ok(self) -> bool | None:
        if self.epsilon is None:
            return None
        return bool(
            self.natural_below_half_k
            and self.balanced_above_target
            and self.similarity_below_eps
        )


def sweep_rows(
    family: str, k: int, xs, epsilon: float | Fraction | None = None
) -> list[SweepRow]:
    xs = sorted(set(xs))
    if not xs:
        raise MalformedInputError("empty scale range")
    if any(x < 2 for x in xs):
        raise MalformedInputError(f"scale values must be >= 2, got {xs}")
    eps = None if epsilon is None else Fraction(epsilon)
    rows = []
    for x in xs:
        base = comparison_row(family, k, x)
        rows.append(
            SweepRow(
                family=family,
                k=k,
                x=x,
                n1=base.n1,
                n2=base.n2,
                j=base.j,
                n=base.n,
                m=base.m,
                qn_natural=base.values[0],
                qn_balanced=base.values[5],
                similarity=base.values[6],
                bounds=BoundSet(
                    natural=base.values[1],
                    balanced_lower=base.values[4],
                    half_k=base.values[2],
                    four_kx=base.values[3],
                ),
                sufficient=sufficient_condition(family, k, base.n1, base.n2, base.j),
                chain_ok=base.chain_ok,
                epsilon=eps,
            )
        )
    return rows


def _bool_cell(value: bool | None) -> str:
    return "" if value is None else str(value).lower()


def sweep_csv(rows: list[SweepRow]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "family", "K", "x", "N1", "N2", "J", "n", "m",
            "qn_natural", "qn_balanced", "similarity",
            "closed_form", "half_k", "four_kx", "balanced_lower",
            "natural_below_half_k", "balanced_above_half_k",
            "balanced_beats_natural", "sufficient_condition", "chain_ok",
            "balanced_above_target", "similarity_below_eps", "witness_ok",
            "qn_natural_exact", "qn_balanced_exact", "similarity_exact",
        ]
    )
    for r in rows:
        writer.writerow(
            [
                r.family, r.k, r.x, r.n1, r.n2, r.j, r.n, r.m,
                format_fixed(r.qn_natural),
                format_fixed(r.qn_balanced),
                format_fixed(r.similarity),
                format_fixed(r.bounds.natural),
                format_fixed(r.bounds.half_k),
                format_fixed(r.bounds.four_kx),
                format_fixed(r.bounds.balanced_lower),
                _bool_cell(r.natural_below_half_k),
                _bool_cell(r.balanced_above_half_k),
                _bool_cell(r.balanced_beats_natural),
                _bool_cell(r.sufficient),
                _bool_cell(r.chain_ok),
                _bool_cell(r.balanced_above_target),
                _bool_cell(r.similarity_below_eps),
                _bool_cell(r.witness_ok),
                str(r.qn_natural), str(r.qn_balanced), str(r.similarity),
            ]
        )
    return buf.getvalue()


def score_csv(report, gamma: float | None = None) -> str:
    """One-row CSV for a scored (graph, clustering) pair."""
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["q_f", "q_0", "q_n", "q_gamma", "m", "K",
         "q_f_exact", "q_0_exact", "q_n_exact"]
    )
    writer.writerow(
        [
            repr(report.q_f),
            repr(report.q_0),
            repr(report.q_n),
            "" if report.q_gamma is None else repr(report.q_gamma),
            report.m,
            report.k,
            str(report.q_f_exact),
            str(report.q_0_exact),
            str(report.q_n_exact),
        ]
    )
    return buf.getvalue()
