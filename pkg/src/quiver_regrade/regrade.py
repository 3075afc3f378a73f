"""Arrow splitting and full regrading to a degree-1-generated presentation.

One split replaces an arrow b of degree >= 2 by a degree-1 arrow into a
fresh vertex followed by an arrow of degree deg(b)-1 out of it, dropping the
weight discrepancy by exactly one.  Paths and relations are transported by
the degree-preserving rewrite that expands each occurrence of b into the two
halves.  Iterating the split on a deterministically chosen arrow reaches a
quiver whose arrows all have degree 1 in exactly discrepancy-many steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import IdealPresentation, Path, UniformElement
from .quiver import (
    Arrow,
    WeightedQuiver,
    fresh_split_names,
    fresh_vertex_name,
    weight_discrepancy,
)


class SplitError(ValueError):
    pass


@dataclass(frozen=True)
class SplitTrace:
    split_arrow: str
    new_vertex: str
    first: str
    second: str
    before: WeightedQuiver
    after: WeightedQuiver


@dataclass(frozen=True)
class RegradeResult:
    final_quiver: WeightedQuiver
    final_ideal: IdealPresentation
    trace: tuple[SplitTrace, ...]


def split_arrow(q: WeightedQuiver, name: str) -> SplitTrace:
    """Split one arrow of degree >= 2; degree-1 splits are a hard error."""
    arrow = q.arrow_map.get(name)
    if arrow is None:
        raise SplitError(f"unknown arrow {name!r}")
    if arrow.degree < 2:
        raise SplitError(
            f"cannot split arrow {name!r} of degree {arrow.degree}; "
            "the second half would get degree 0"
        )
    z = fresh_vertex_name(q)
    first_name, second_name = fresh_split_names(q, name)
    kept = [a for a in q.arrows if a.name != name]
    kept.append(Arrow(first_name, arrow.source, z, 1))
    kept.append(Arrow(second_name, z, arrow.target, arrow.degree - 1))
    after = WeightedQuiver.build(list(q.vertices) + [z], kept)
    return SplitTrace(name, z, first_name, second_name, q, after)


def rewrite_path(t: SplitTrace, p: Path) -> Path:
    """Expand each occurrence of the split arrow into its two halves.

    Source, target, and degree are preserved; paths without an occurrence
    come back unchanged.
    """
    if p.is_trivial or t.split_arrow not in p.arrows:
        return p
    expanded: list[str] = []
    for name in p.arrows:
        if name == t.split_arrow:
            expanded.append(t.first)
            expanded.append(t.second)
        else:
            expanded.append(name)
    return Path(p.source, p.target, p.degree, tuple(expanded))


def rewrite_sum(t: SplitTrace, x: UniformElement) -> UniformElement:
    """Coefficientwise transport of a uniform element through one split."""
    moved = x.sum.map_paths(lambda p: rewrite_path(t, p))
    return UniformElement(moved, x.source, x.target, x.degree)


def rewrite_ideal(t: SplitTrace, ideal: IdealPresentation) -> IdealPresentation:
    return IdealPresentation(tuple(rewrite_sum(t, g) for g in ideal))


def pick_split_target(q: WeightedQuiver) -> str | None:
    """Lexicographically smallest name among arrows of maximal degree."""
    top = q.max_degree()
    if top < 2:
        return None
    return min(a.name for a in q.arrows if a.degree == top)


def regrade(q: WeightedQuiver, ideal: IdealPresentation) -> RegradeResult:
    """Split until every arrow has degree 1, transporting the relations.

    Terminates in exactly weight_discrepancy(q) splits; an input already
    generated in degree 1 comes back unchanged with an empty trace.
    """
    trace: list[SplitTrace] = []
    current_q, current_ideal = q, ideal
    while True:
        target = pick_split_target(current_q)
        if target is None:
            break
        step = split_arrow(current_q, target)
        current_ideal = rewrite_ideal(step, current_ideal)
        current_q = step.after
        trace.append(step)
    assert len(trace) == weight_discrepancy(q)
    return RegradeResult(current_q, current_ideal, tuple(trace))
