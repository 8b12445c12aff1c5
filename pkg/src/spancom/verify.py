"""Cross-checks of the uni-cyclic closed forms against brute-force oracles,
and the JSON report document used by ``spancom report``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .errors import NotUnicyclic
from .graph import Graph, as_unicyclic, attachment_shape, make_unicyclic
from .simplicial import (
    f_vector,
    find_shelling_order,
    is_shifted,
    minimal_nonfaces,
    spanning_complex,
)
from .sr import (
    expand_series,
    h_from_f,
    hilbert_function_direct,
    normalize,
    series_from_f,
    strip,
)
from .trees import (
    ENUMERATION_GUARD,
    count_spanning_trees_kirchhoff,
    enumerate_spanning_trees,
    unicyclic_spanning_trees,
)
from .unicyclic import f_closed, h_closed, hilbert_closed

SKIPPED = "skipped"
SHAPES = ("chain", "star")


@dataclass
class CheckRecord:
    name: str
    closed_form_value: Any
    oracle_value: Any
    match: bool
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "closed_form_value": self.closed_form_value,
            "oracle_value": self.oracle_value,
            "match": self.match,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass
class VerificationReport:
    n: int
    m: int
    attachment: str
    parents: list[int]
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.match for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.match]

    def to_dict(self) -> dict:
        return {
            "params": {"n": self.n, "m": self.m, "attachment": self.attachment, "parents": self.parents},
            "checks": [c.to_dict() for c in self.checks],
            "overall": self.overall,
        }


def _timed(report: VerificationReport, name: str, closed: Callable[[], Any], oracle: Callable[[], Any],
           compare: Callable[[Any, Any], bool] | None = None):
    t0 = time.perf_counter()
    cv = closed()
    ov = oracle()
    ok = compare(cv, ov) if compare else cv == ov
    report.checks.append(CheckRecord(name, cv, ov, bool(ok), (time.perf_counter() - t0) * 1e3))


def verify_cell(n: int, m: int, shape: str = "chain", expand_to: int = 12, *,
                f_formula=None, h_formula=None, series_formula=None) -> VerificationReport:
    """Run every closed-form-vs-oracle check for one ``(n, m, shape)``.

    The formula arguments exist so the harness can be fed a deliberately
    broken formula and shown to notice.
    """
    f_formula = f_formula or f_closed
    h_formula = h_formula or h_closed
    series_formula = series_formula or hilbert_closed
    parents = attachment_shape(n, m, shape)
    u = make_unicyclic(n, m, parents)
    g = u.base
    report = VerificationReport(n, m, shape, parents)
    c = spanning_complex(g)
    f_oracle = f_vector(c)

    _timed(report, "spanning_trees",
           lambda: [list(t) for t in unicyclic_spanning_trees(u)],
           lambda: [list(t) for t in enumerate_spanning_trees(g)],
           lambda a, b: a == b and len(a) == m)
    _timed(report, "kirchhoff_count", lambda: m, lambda: count_spanning_trees_kirchhoff(g))
    _timed(report, "f_vector",
           lambda: list(f_formula(n, m)),
           lambda: list(f_oracle),
           lambda a, b: a == b and len(b) - 1 == n - 2)
    _timed(report, "h_vector",
           lambda: list(h_formula(n, m)),
           lambda: list(h_from_f(f_oracle, n - 2)))
    _timed(report, "hilbert_numerator",
           lambda: [list(series_formula(n, m).numerator), series_formula(n, m).pole_order],
           lambda: [list(series_from_f(f_oracle).numerator), series_from_f(f_oracle).pole_order])
    _timed(report, "hilbert_series",
           lambda: expand_series(series_formula(n, m), expand_to),
           lambda: [hilbert_function_direct(c, j) for j in range(expand_to + 1)])
    _timed(report, "facet_sum", lambda: sum(h_formula(n, m)), lambda: len(c.facets))
    _timed(report, "shifted", lambda: True, lambda: is_shifted(c)[0])
    _timed(report, "shellable", lambda: True, lambda: find_shelling_order(c) is not None)
    return report


def run_verification(n_max: int = 9, expand_to: int = 12, shapes=SHAPES, **formulas) -> list[VerificationReport]:
    """Every ``3 <= m <= n <= n_max`` crossed with ``shapes``, in ``(n, m, shape)`` order."""
    return [
        verify_cell(n, m, shape, expand_to, **formulas)
        for n in range(3, n_max + 1)
        for m in range(3, n + 1)
        for shape in shapes
    ]


# -- report document ---------------------------------------------------------


def _closed_fields(n: int, m: int) -> dict:
    series = hilbert_closed(n, m)
    raw = h_closed(n, m)
    return {
        "f_vector": list(f_closed(n, m)),
        "h_vector": {"raw": list(raw), "normalized": strip(raw)},
        "hilbert": {"numerator": list(series.numerator), "pole_order": series.pole_order},
    }


_ENUMERATION_FIELDS = (
    "facets",
    "spanning_tree_count",
    "shifted",
    "shift_witness",
    "shelling_order",
    "minimal_nonfaces",
)


def closed_form_report(n: int, m: int) -> dict:
    doc = {"source": "closed_form", "params": {"n": n, "m": m}, "unicyclic": {"n": n, "m": m}}
    doc.update(_closed_fields(n, m))
    doc.update({k: SKIPPED for k in _ENUMERATION_FIELDS})
    return doc


def graph_report(g: Graph) -> dict:
    """Report for a concrete graph under its own edge labelling.

    Past the enumeration guard the face-level fields read ``"skipped"``; the
    numeric invariants then come from the closed forms when the graph is
    uni-cyclic (they do not depend on the labelling).
    """
    try:
        u = as_unicyclic(g)
        uni = {
            "n": u.n,
            "m": u.m,
            "cycle_edge_labels": sorted(u.cycle_edge_labels),
            "canonical": u.canonical,
        }
    except NotUnicyclic:
        u, uni = None, None
    doc: dict[str, Any] = {
        "params": {"vertex_count": g.vertex_count, "edge_count": g.edge_count},
        "unicyclic": uni,
    }
    if g.edge_count > ENUMERATION_GUARD:
        doc.update({k: SKIPPED for k in _ENUMERATION_FIELDS})
        if u is not None:
            doc["source"] = "closed_form"
            doc.update(_closed_fields(u.n, u.m))
        else:
            doc["source"] = "none"
            doc.update({"f_vector": SKIPPED, "h_vector": SKIPPED, "hilbert": SKIPPED})
        return doc

    c = spanning_complex(g)
    f = f_vector(c)
    series = series_from_f(f)
    shifted, witness = is_shifted(c)
    order = find_shelling_order(c) if c.is_pure else None
    index = {F: k for k, F in enumerate(c.facets, start=1)}
    doc.update({
        "source": "enumeration",
        "facets": [list(F) for F in c.facets],
        "spanning_tree_count": len(c.facets),
        "f_vector": list(f),
        "h_vector": {"raw": list(h_from_f(f)), "normalized": list(normalize(series).numerator)},
        "hilbert": {"numerator": list(series.numerator), "pole_order": series.pole_order},
        "shifted": shifted,
        "shift_witness": None if witness is None else {
            "face": list(witness[0]), "remove": witness[1], "insert": witness[2]},
        "shelling_order": None if order is None else [index[F] for F in order],
        "minimal_nonfaces": [list(F) for F in minimal_nonfaces(c)],
    })
    return doc
