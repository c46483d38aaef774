"""Serializable form of a spectrum poset: JSON document and Graphviz DOT."""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field

from .spectra import SpectrumPoset, closed_points, generic_points

_PLUCKER_NAME = re.compile(r"^x(\d)(\d)$")


@dataclass
class PointRecord:
    id: int
    generators: list[str]
    rank: int
    closed: bool
    generic: bool
    # Plücker coordinate x_ij drawn as the segment i-j; None for other models
    segments: list[list[int]] | None = None

    def label(self) -> str:
        return "(" + ", ".join(self.generators) + ")" if self.generators else "(0)"


@dataclass
class PosetDocument:
    model: str
    kind: str
    generators: list[str]
    points: list[PointRecord]
    edges: list[list[int]]
    counts: dict = field(default_factory=dict)

    @classmethod
    def from_poset(cls, poset: SpectrumPoset, model: str, kind: str, generators) -> PosetDocument:
        closed = set(closed_points(poset))
        generic = set(generic_points(poset))
        segmentable = all(_PLUCKER_NAME.match(g) for g in generators)
        records = []
        for i, p in enumerate(poset.points):
            segs = None
            if segmentable:
                segs = [[int(a), int(b)] for a, b in (_PLUCKER_NAME.match(g).groups() for g in p.names)]
            records.append(PointRecord(i, list(p.names), poset.ranks[p], p in closed, p in generic, segs))
        counts = {
            "points": len(records),
            "by_rank": poset.rank_histogram(),
            "closed": len(closed),
            "generic": len(generic),
        }
        return cls(model, kind, list(generators), records, [list(e) for e in poset.covers()], counts)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> PosetDocument:
        raw = json.loads(text)
        raw["points"] = [PointRecord(**p) for p in raw["points"]]
        return cls(**raw)

    def to_dot(self) -> str:
        lines = [f'digraph "{self.model}" {{', "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
        by_rank: dict[int, list[PointRecord]] = {}
        for p in self.points:
            by_rank.setdefault(p.rank, []).append(p)
        for r in sorted(by_rank, reverse=True):
            nodes = " ".join(f'P{p.id} [label="{p.label()}"];' for p in by_rank[r])
            lines.append(f"  {{ rank=same; {nodes} }}  // rank {r}")
        for lo, hi in self.edges:
            lines.append(f"  P{lo} -> P{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"
