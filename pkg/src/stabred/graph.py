"""Component tree of the reduced target curve, with inertia orders.

The expected shape for p || |G| with bad reduction: one original component
with inertia of order p, carrying no attachment point, and at least one tail.
Every tail has trivial inertia, attaches to the original component at its own
point lambda_i, and each of 0, 1, oo specializes to exactly one component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .deformation import SpecialDeformationDatum, sdd_validate
from .field import FieldElement, FiniteField, build_field

__all__ = [
    "ComponentNode",
    "ReductionGraph",
    "GraphReport",
    "MARKS",
    "CHECK_NAMES",
    "graph_validate_special_shape",
    "graph_from_datum",
    "graph_to_json",
    "graph_from_json",
    "load_graph",
]

MARKS = ("0", "1", "inf")

CHECK_NAMES = (
    "unique-original",
    "original-inertia-p",
    "tails-inertia-1",
    "attach-points-distinct",
    "star-shaped",
    "marks-assigned-once",
    "attach-avoids-marks",
    "not-exceptional",
)


@dataclass(frozen=True)
class ComponentNode:
    id: str
    kind: str  # "original" or "tail"
    inertia: int
    attach: FieldElement | None = None
    marks: frozenset[str] = frozenset()
    parent: str | None = None  # tails only; None means the original component

    def __post_init__(self):
        if self.kind not in ("original", "tail"):
            raise ValueError(f"unknown component kind {self.kind!r}")
        if not isinstance(self.inertia, int) or self.inertia < 1:
            raise ValueError("inertia order must be a positive integer")
        bad = set(self.marks) - set(MARKS)
        if bad:
            raise ValueError(f"unknown marked points {sorted(bad)}")
        object.__setattr__(self, "marks", frozenset(self.marks))


@dataclass(frozen=True)
class ReductionGraph:
    nodes: tuple[ComponentNode, ...]
    field: FiniteField | None = None

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))

    def originals(self) -> list[ComponentNode]:
        return [n for n in self.nodes if n.kind == "original"]

    def tails(self) -> list[ComponentNode]:
        return [n for n in self.nodes if n.kind == "tail"]


@dataclass
class GraphReport:
    checks: dict[str, bool]
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def graph_validate_special_shape(g: ReductionGraph, p: int) -> GraphReport:
    checks: dict[str, bool] = {}
    msgs: list[str] = []
    originals = g.originals()
    tails = g.tails()
    ids = {n.id for n in g.nodes}

    checks["unique-original"] = len(originals) == 1 and len(ids) == len(g.nodes)
    if len(originals) != 1:
        msgs.append(f"unique-original: found {len(originals)} original components")
    elif len(ids) != len(g.nodes):
        msgs.append("unique-original: duplicate component ids")

    checks["original-inertia-p"] = bool(originals) and all(n.inertia == p and n.attach is None for n in originals)
    if not checks["original-inertia-p"]:
        msgs.append(f"original-inertia-p: the original component must have inertia of order {p} and no attachment point")

    bad_tails = [n.id for n in tails if n.inertia != 1]
    checks["tails-inertia-1"] = not bad_tails
    if bad_tails:
        msgs.append(f"tails-inertia-1: tails {bad_tails} have nontrivial inertia (a second bad component)")

    attaches = [n.attach for n in tails]
    checks["attach-points-distinct"] = all(a is not None for a in attaches) and len(set(attaches)) == len(attaches)
    if not checks["attach-points-distinct"]:
        msgs.append("attach-points-distinct: every tail needs its own attachment point")

    root_id = originals[0].id if len(originals) == 1 else None
    stray = [n.id for n in tails if n.parent not in (None, root_id)]
    checks["star-shaped"] = root_id is not None and not stray
    if stray:
        msgs.append(f"star-shaped: tails {stray} do not attach to the original component")

    counts = {m: sum(m in n.marks for n in g.nodes) for m in MARKS}
    checks["marks-assigned-once"] = all(c == 1 for c in counts.values())
    if not checks["marks-assigned-once"]:
        msgs.append(f"marks-assigned-once: specialization counts {counts}")

    on_original = set().union(*(n.marks for n in originals)) if originals else set()
    collide = []
    for n in tails:
        if n.attach is None:
            continue
        if ("0" in on_original and n.attach.is_zero()) or ("1" in on_original and n.attach == 1):
            collide.append(n.id)
    checks["attach-avoids-marks"] = not collide
    if collide:
        msgs.append(f"attach-avoids-marks: tails {collide} meet the original component at a marked point")

    checks["not-exceptional"] = bool(tails)
    if not tails:
        msgs.append("not-exceptional: no tails; this is the exceptional case (bad reduction of the cover, good reduction of the curve), which is not modeled")
    return GraphReport(checks, msgs)


def graph_from_datum(d: SpecialDeformationDatum) -> ReductionGraph:
    report = sdd_validate(d)
    if not report.valid:
        raise ValueError(f"invalid deformation datum: {', '.join(report.violations)}")
    nodes = [ComponentNode("Y0", "original", d.p, None, frozenset(MARKS))]
    for i, lam in enumerate(d.lambdas, start=1):
        nodes.append(ComponentNode(f"Y{i}", "tail", 1, lam, frozenset()))
    return ReductionGraph(tuple(nodes), d.F)


# ---------------------------------------------------------------------------
# JSON


def graph_to_json(g: ReductionGraph) -> dict:
    out: dict = {}
    if g.field is not None:
        out["field"] = g.field.to_json()
    nodes = []
    for n in g.nodes:
        entry = {
            "id": n.id,
            "kind": n.kind,
            "inertia": n.inertia,
            "attach": None if n.attach is None else n.attach.to_json(),
            "marks": sorted(n.marks, key=MARKS.index),
        }
        if n.parent is not None:
            entry["parent"] = n.parent
        nodes.append(entry)
    out["nodes"] = nodes
    return out


def graph_from_json(data: dict, p: int | None = None) -> tuple[ReductionGraph, int]:
    """Parse graph JSON; returns the graph and the prime it refers to."""
    fdesc = data.get("field")
    if fdesc is not None:
        p = int(fdesc["p"]) if p is None else p
        if int(fdesc["p"]) != p:
            raise ValueError("prime in the file disagrees with the requested prime")
        F = build_field(p, int(fdesc.get("k", 1)))
        if "modulus" in fdesc and tuple(fdesc["modulus"]) != F.modulus:
            raise ValueError(f"unsupported modulus {fdesc['modulus']}; expected {list(F.modulus)}")
    else:
        if p is None:
            raise ValueError("graph JSON has no field descriptor and no prime was given")
        ks = {len(n["attach"]) for n in data["nodes"] if n.get("attach") is not None}
        if len(ks) > 1:
            raise ValueError("attachment points have inconsistent lengths")
        F = build_field(p, ks.pop() if ks else 1)
    nodes = []
    for n in data["nodes"]:
        attach = n.get("attach")
        nodes.append(ComponentNode(
            id=str(n["id"]),
            kind=n["kind"],
            inertia=int(n["inertia"]),
            attach=None if attach is None else F(attach),
            marks=frozenset(n.get("marks", ())),
            parent=n.get("parent"),
        ))
    return ReductionGraph(tuple(nodes), F), p


def load_graph(path: str | Path, p: int | None = None) -> tuple[ReductionGraph, int]:
    with open(path) as fh:
        return graph_from_json(json.load(fh), p)
