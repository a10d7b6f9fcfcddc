"""Per-graph verdict records and their JSON / TSV serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .canonical import canonical_form
from .csf import csf
from .fourvertex import FourVertexKind, find_induced, freeness_profile
from .graph import Graph
from .graph6 import encode
from .structure import independence_number
from .symfun import is_positive

SCHEMA_VERSION = "csf-report/1"

TSV_COLUMNS = ("graph_id", "n", "m", "alpha", "e_positive", "s_positive", "e_expansion", "s_expansion")

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "chromatic symmetric function report",
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "graph_id", "n", "m", "freeness", "alpha", "e_expansion",
                 "s_expansion", "e_positive", "s_positive", "timings"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "graph_id": {"type": "string", "pattern": "^[?-~]+$"},
        "n": {"type": "integer", "minimum": 0, "maximum": 62},
        "m": {"type": "integer", "minimum": 0},
        "freeness": {
            "type": "object",
            "additionalProperties": False,
            "required": [k.value for k in FourVertexKind],
            "properties": {k.value: {"type": "boolean"} for k in FourVertexKind},
        },
        "alpha": {"type": "integer", "minimum": 0},
        "e_expansion": {"type": "string"},
        "s_expansion": {"type": "string"},
        "e_positive": {"type": "boolean"},
        "s_positive": {"type": "boolean"},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}


@dataclass
class Report:
    graph_id: str
    n: int
    m: int
    freeness: dict[str, bool]
    alpha: int
    e_expansion: str
    s_expansion: str
    e_positive: bool
    s_positive: bool
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self, timings: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "freeness": self.freeness,
            "alpha": self.alpha,
            "e_expansion": self.e_expansion,
            "s_expansion": self.s_expansion,
            "e_positive": self.e_positive,
            "s_positive": self.s_positive,
            "timings": self.timings if timings else {},
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), sort_keys=False)

    def tsv_row(self) -> str:
        return "\t".join(_tsv_cell(getattr(self, c)) for c in TSV_COLUMNS)


def _tsv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def tsv_header() -> str:
    return "\t".join(TSV_COLUMNS)


def build_report(g: Graph, algorithm: str | None = None, cross_check: bool = False,
                 dense_fraction: float | None = None) -> Report:
    res = csf(g, algorithm=algorithm, cross_check=cross_check, dense_fraction=dense_fraction)
    e_ok, _ = is_positive(res.e_expansion)
    s_ok, _ = is_positive(res.s_expansion)
    canon, _ = canonical_form(g)
    return Report(
        graph_id=encode(canon),
        n=g.n,
        m=g.m,
        freeness={k.value: free for k, free in freeness_profile(g).items()},
        alpha=independence_number(g),
        e_expansion=str(res.e_expansion),
        s_expansion=str(res.s_expansion),
        e_positive=e_ok,
        s_positive=s_ok,
        timings={k: round(v, 6) for k, v in res.timings.items()},
    )


def free_check(g: Graph, kinds: list[FourVertexKind]) -> dict:
    """Freeness verdict for ``kinds`` with one witness 4-subset per present kind."""
    per_kind = {}
    for kind in kinds:
        witness = find_induced(g, [kind])
        per_kind[kind.value] = {"free": witness is None, "witness": list(witness) if witness else None}
    first = find_induced(g, kinds)
    return {
        "schema": "csf-freecheck/1",
        "graph_id": encode(canonical_form(g)[0]),
        "n": g.n,
        "m": g.m,
        "kinds": [k.value for k in kinds],
        "free": first is None,
        "witness": list(first) if first else None,
        "per_kind": per_kind,
    }
