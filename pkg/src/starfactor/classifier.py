"""Structural membership classifier for girth at least five.

For connected graphs of girth >= 5 membership in the uniform-weighting
family is decided by shape alone: the graph is a 5-cycle or a 7-cycle,
or every vertex is a leaf or a stem, or every component left after
deleting the leaves and stems is a 5-cycle (with at most two vertices of
degree >= 3 in the original graph, nonadjacent when there are two), a
star K_{1,m} (center of original degree m when m >= 2), or an isolated
vertex.  Members get a constructed witness weighting; graphs of girth
three or four fall back to the brute-force oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .factors import DEFAULT_CAP
from .graph import (
    Girth,
    Graph,
    VertexClass,
    classify_vertices,
    connected_components,
    girth,
    induced_delete,
    induced_subgraph,
)
from .solver import (
    OracleResult,
    OracleVerdict,
    Refutation,
    Weighting,
    omega_oracle,
)


class Verdict(enum.Enum):
    MEMBER = "Member"
    NOT_MEMBER = "NotMember"
    VACUOUS = "Vacuous"


class Route(enum.Enum):
    STRUCTURAL_GIRTH5 = "StructuralGirth5"
    ORACLE_FALLBACK = "OracleFallback"


class CaseTag(enum.Enum):
    C5 = "C5"
    C7 = "C7"
    ALL_LEAF_OR_STEM = "AllLeafOrStem"
    CASE_4A = "Case4a"
    CASE_4B = "Case4b"
    CASE_4C = "Case4c"
    MIXED_4 = "Mixed4"
    NEG_DELTA2_GIRTH = "NegDelta2Girth"
    NEG_CORE_SHAPE = "NegCoreShape"
    REFUTED = "Refuted"


@dataclass(frozen=True)
class FiveCycleCore:
    """Core 5-cycle; high_degree lists its vertices of original degree >= 3."""

    vertices: tuple[int, ...]
    high_degree: tuple[int, ...]


@dataclass(frozen=True)
class StarCore:
    center: int
    leaves: tuple[int, ...]
    center_degree: int  # degree of the center in the original graph

    @property
    def m(self) -> int:
        return len(self.leaves)


@dataclass(frozen=True)
class IsolatedVertexCore:
    vertex: int


@dataclass(frozen=True)
class OtherCore:
    vertices: tuple[int, ...]
    reason: str


CoreComponentKind = FiveCycleCore | StarCore | IsolatedVertexCore | OtherCore


@dataclass(frozen=True)
class ComponentReport:
    """Per connected component: its vertices, verdict, tag and core shapes."""

    vertices: tuple[int, ...]
    verdict: Verdict
    route: Route
    tag: CaseTag | None
    core_kinds: tuple[CoreComponentKind, ...] = ()
    oracle: OracleResult | None = None
    # original edge index for each component-local edge index
    edge_map: tuple[int, ...] = ()


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    route: Route
    case_tag: CaseTag | None
    girth: Girth
    witness: Weighting | None
    refutation: Refutation | None
    per_component: tuple[ComponentReport, ...] = ()


def remove_leaves_and_stems(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Delete all leaves and stems; returns (core, core-vertex -> original)."""
    vc = classify_vertices(g)
    core, old_to_new = induced_delete(g, vc.leaves | vc.stems)
    return core, {new: old for old, new in old_to_new.items()}


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and len(
        connected_components(g)
    ) == 1


def _core_component_kind(
    core: Graph, comp: frozenset[int], g: Graph, core_to_orig: dict[int, int]
) -> CoreComponentKind:
    verts = tuple(sorted(comp))
    orig = tuple(core_to_orig[v] for v in verts)
    if len(verts) == 1:
        return IsolatedVertexCore(vertex=orig[0])
    degs = {v: sum(1 for u in core.adjacency[v] if u in comp) for v in verts}
    ecount = sum(degs.values()) // 2
    if ecount == len(verts) - 1:
        centers = [v for v in verts if degs[v] == len(verts) - 1]
        if centers:
            center = centers[0] if len(verts) > 2 else min(verts)
            leaves_ok = all(degs[v] == 1 for v in verts if v != center)
            if leaves_ok:
                c_orig = core_to_orig[center]
                return StarCore(
                    center=c_orig,
                    leaves=tuple(core_to_orig[v] for v in verts if v != center),
                    center_degree=g.degree(c_orig),
                )
    if len(verts) == 5 and all(degs[v] == 2 for v in verts):
        high = tuple(v for v in orig if g.degree(v) >= 3)
        return FiveCycleCore(vertices=orig, high_degree=high)
    return OtherCore(vertices=orig, reason="neither a star, a 5-cycle, nor a vertex")


def _core_kind_ok(kind: CoreComponentKind, g: Graph) -> bool:
    if isinstance(kind, IsolatedVertexCore):
        return True
    if isinstance(kind, StarCore):
        return kind.m == 1 or kind.center_degree == kind.m
    if isinstance(kind, FiveCycleCore):
        if len(kind.high_degree) > 2:
            return False
        if len(kind.high_degree) == 2:
            u, v = kind.high_degree
            return not g.has_edge(u, v)
        return True
    return False


def construct_weighting(g: Graph, core_k11_pairs: list[tuple[int, int]]) -> Weighting:
    """Witness for a structural member.

    Weight 1 everywhere; each edge that is itself a K_{1,1} core component
    gets 2 (the a+b rule with a = b = 1: a star-factor covers that pair
    either by the pair's own edge or by one stem edge at each endpoint).
    """
    weights = [Fraction(1)] * g.m
    for u, v in core_k11_pairs:
        weights[g.edge_index[(min(u, v), max(u, v))]] = Fraction(2)
    return Weighting(tuple(weights))


def classify_connected_girth5(g: Graph) -> Classification:
    """Structural decision for one connected graph of girth >= 5.

    Precondition (contract error if violated): g is connected, has no
    isolated vertex, and girth(g) >= 5.  Callers route other graphs to
    the oracle.
    """
    gg = girth(g)
    if not gg >= 5:
        raise ValueError(f"girth {gg} < 5: route this graph to the oracle")
    if g.n == 0 or g.has_isolated_vertex():
        raise ValueError("graph has an isolated vertex")
    if len(connected_components(g)) != 1:
        raise ValueError("graph is not connected")

    comp_verts = tuple(range(g.n))
    edge_map = tuple(range(g.m))

    def member(tag: CaseTag, witness: Weighting, kinds=()) -> Classification:
        report = ComponentReport(
            vertices=comp_verts,
            verdict=Verdict.MEMBER,
            route=Route.STRUCTURAL_GIRTH5,
            tag=tag,
            core_kinds=tuple(kinds),
            edge_map=edge_map,
        )
        return Classification(
            verdict=Verdict.MEMBER,
            route=Route.STRUCTURAL_GIRTH5,
            case_tag=tag,
            girth=gg,
            witness=witness,
            refutation=None,
            per_component=(report,),
        )

    def non_member(tag: CaseTag, kinds=()) -> Classification:
        report = ComponentReport(
            vertices=comp_verts,
            verdict=Verdict.NOT_MEMBER,
            route=Route.STRUCTURAL_GIRTH5,
            tag=tag,
            core_kinds=tuple(kinds),
            edge_map=edge_map,
        )
        return Classification(
            verdict=Verdict.NOT_MEMBER,
            route=Route.STRUCTURAL_GIRTH5,
            case_tag=tag,
            girth=gg,
            witness=None,
            refutation=None,
            per_component=(report,),
        )

    vc = classify_vertices(g)
    if not vc.leaves:
        # minimum degree >= 2: members are exactly the 5-cycle and 7-cycle
        if _is_cycle(g) and g.n in (5, 7):
            tag = CaseTag.C5 if g.n == 5 else CaseTag.C7
            return member(tag, Weighting.constant(g.m))
        return non_member(CaseTag.NEG_DELTA2_GIRTH)

    if vc.leaves | vc.stems == frozenset(range(g.n)):
        return member(CaseTag.ALL_LEAF_OR_STEM, construct_weighting(g, []))

    core, core_to_orig = remove_leaves_and_stems(g)
    kinds = [
        _core_component_kind(core, comp, g, core_to_orig)
        for comp in connected_components(core)
    ]
    if not all(_core_kind_ok(k, g) for k in kinds):
        return non_member(CaseTag.NEG_CORE_SHAPE, kinds)
    tags = set()
    k11_pairs: list[tuple[int, int]] = []
    for kind in kinds:
        if isinstance(kind, FiveCycleCore):
            tags.add(CaseTag.CASE_4A)
        elif isinstance(kind, StarCore):
            tags.add(CaseTag.CASE_4B)
            if kind.m == 1:
                k11_pairs.append((kind.center, kind.leaves[0]))
        else:
            tags.add(CaseTag.CASE_4C)
    tag = tags.pop() if len(tags) == 1 else CaseTag.MIXED_4
    return member(tag, construct_weighting(g, k11_pairs), kinds)


def classify(g: Graph, cap: int = DEFAULT_CAP) -> Classification:
    """Component-wise classification of an arbitrary graph.

    Girth >= 5 components take the structural path; others go to the
    brute-force oracle.  The graph is a member iff every component is;
    witnesses concatenate over components.  CapExceeded propagates from
    the fallback.
    """
    if g.has_isolated_vertex():
        return Classification(
            verdict=Verdict.VACUOUS,
            route=Route.STRUCTURAL_GIRTH5,
            case_tag=None,
            girth=girth(g),
            witness=None,
            refutation=None,
        )
    reports: list[ComponentReport] = []
    weights: list[Fraction | None] = [None] * g.m
    refutation: Refutation | None = None
    overall = Verdict.MEMBER
    for comp in connected_components(g):
        verts = tuple(sorted(comp))
        sub, old_to_new = induced_subgraph(g, verts)
        edge_map = tuple(
            i for i, (u, v) in enumerate(g.edges) if u in comp and v in comp
        )
        if girth(sub) >= 5:
            cls = classify_connected_girth5(sub)
            report = ComponentReport(
                vertices=verts,
                verdict=cls.verdict,
                route=Route.STRUCTURAL_GIRTH5,
                tag=cls.case_tag,
                core_kinds=_relabel_kinds(cls.per_component[0].core_kinds, verts),
                edge_map=edge_map,
            )
            if cls.verdict is Verdict.MEMBER and cls.witness is not None:
                for local, w in enumerate(cls.witness.weights):
                    weights[edge_map[local]] = w
        else:
            result = omega_oracle(sub, cap=cap)
            if result.verdict is OracleVerdict.CAP_EXCEEDED:
                from .factors import CapExceeded

                raise CapExceeded(cap)
            verdict = (
                Verdict.MEMBER
                if result.verdict is OracleVerdict.MEMBER
                else Verdict.NOT_MEMBER
            )
            report = ComponentReport(
                vertices=verts,
                verdict=verdict,
                route=Route.ORACLE_FALLBACK,
                tag=CaseTag.REFUTED if verdict is Verdict.NOT_MEMBER else None,
                oracle=result,
                edge_map=edge_map,
            )
            if verdict is Verdict.MEMBER and result.witness is not None:
                for local, w in enumerate(result.witness.weighting.weights):
                    weights[edge_map[local]] = w
            elif result.refutation is not None and refutation is None:
                refutation = result.refutation
        reports.append(report)
        if report.verdict is Verdict.NOT_MEMBER:
            overall = Verdict.NOT_MEMBER
    route = (
        Route.ORACLE_FALLBACK
        if any(r.route is Route.ORACLE_FALLBACK for r in reports)
        else Route.STRUCTURAL_GIRTH5
    )
    if overall is Verdict.MEMBER:
        witness = Weighting(tuple(w if w is not None else Fraction(1) for w in weights))
        failing_tag = None
    else:
        witness = None
        failing_tag = next(
            r.tag for r in reports if r.verdict is Verdict.NOT_MEMBER
        )
    member_tags = {r.tag for r in reports if r.verdict is Verdict.MEMBER}
    if overall is Verdict.MEMBER:
        if len(member_tags) == 1:
            case_tag = member_tags.pop()
        elif not member_tags:
            case_tag = None
        else:
            case_tag = CaseTag.MIXED_4
    else:
        case_tag = failing_tag
    return Classification(
        verdict=overall,
        route=route,
        case_tag=case_tag,
        girth=girth(g),
        witness=witness,
        refutation=refutation,
        per_component=tuple(reports),
    )


def _kind_str(kind: CoreComponentKind) -> str:
    if isinstance(kind, FiveCycleCore):
        return "FiveCycle"
    if isinstance(kind, StarCore):
        return f"Star(m={kind.m})"
    if isinstance(kind, IsolatedVertexCore):
        return "IsolatedVertex"
    return f"Other({kind.reason})"


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def classification_to_json(g: Graph, cls: Classification) -> dict:
    """The classifier's report object with fixed field names."""
    components = []
    for report in cls.per_component:
        if report.route is Route.ORACLE_FALLBACK:
            kind = "OracleFallback"
        elif report.core_kinds:
            kind = "+".join(_kind_str(k) for k in report.core_kinds)
        else:
            kind = report.tag.value if report.tag else "EmptyCore"
        components.append(
            {
                "vertices": list(report.vertices),
                "kind": kind,
                "tag": report.tag.value if report.tag else None,
            }
        )
    witness = None
    if cls.witness is not None:
        integral = cls.witness.integral
        witness = [
            {"u": u, "v": v, "weight": integral[i]}
            for i, (u, v) in enumerate(g.edges)
        ]
    refutation = None
    if cls.refutation is not None:
        nonzero = [
            (i, c) for i, c in enumerate(cls.refutation.coeffs) if c != 0
        ]
        refutation = {
            "certificate": {
                "coeffs": [[i, _fraction_str(c)] for i, c in nonzero],
                "forcedZero": [_fraction_str(x) for x in cls.refutation.forced_zero],
            }
        }
        if len(nonzero) == 1:
            # a single row means one factor's edges strictly contain another's
            refutation["factorPair"] = [0, nonzero[0][0] + 1]
    return {
        "verdict": cls.verdict.value,
        "route": cls.route.value,
        "caseTag": cls.case_tag.value if cls.case_tag else None,
        "girth": None if cls.girth.is_infinite else cls.girth.value,
        "components": components,
        "witness": witness,
        "refutation": refutation,
    }


def _relabel_kinds(
    kinds: tuple[CoreComponentKind, ...], verts: tuple[int, ...]
) -> tuple[CoreComponentKind, ...]:
    """Map component-local vertex ids in core kinds back to original ids."""
    out: list[CoreComponentKind] = []
    for kind in kinds:
        if isinstance(kind, FiveCycleCore):
            out.append(
                FiveCycleCore(
                    vertices=tuple(verts[v] for v in kind.vertices),
                    high_degree=tuple(verts[v] for v in kind.high_degree),
                )
            )
        elif isinstance(kind, StarCore):
            out.append(
                StarCore(
                    center=verts[kind.center],
                    leaves=tuple(verts[v] for v in kind.leaves),
                    center_degree=kind.center_degree,
                )
            )
        elif isinstance(kind, IsolatedVertexCore):
            out.append(IsolatedVertexCore(vertex=verts[kind.vertex]))
        else:
            out.append(
                OtherCore(
                    vertices=tuple(verts[v] for v in kind.vertices),
                    reason=kind.reason,
                )
            )
    return tuple(out)
