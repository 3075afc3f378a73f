"""Graded-piece dimensions of a path algebra modulo uniform relations.

The degree-d piece of the two-sided ideal (r_1, ..., r_n) is spanned by the
products p * r_i * s over all composable path pairs with matching total
degree.  The quotient dimension is the path count minus the exact rank of
that span in the degree-d path basis.
"""

from __future__ import annotations

from typing import Iterator

from .fields import QQ, Field
from .linalg import Matrix, rank_naive, rank_of_rows
from .paths import IdealPresentation, PathSum, enumerate_paths, multiply_paths
from .quiver import WeightedQuiver

DEFAULT_MAX_DEGREE = 12
DEFAULT_MAX_PATHS = 100_000


def _relation_rows(
    q: WeightedQuiver,
    ideal: IdealPresentation,
    degree: int,
    vertex: str | None,
    field: Field,
    basis_index: dict,
    max_paths: int | None,
) -> Iterator[list]:
    ncols = len(basis_index)
    for gen in ideal:
        sum_in_field = gen.sum.to_field(field) if gen.sum.field != field else gen.sum
        if degree < gen.degree:
            continue
        for left_deg in range(degree - gen.degree + 1):
            right_deg = degree - gen.degree - left_deg
            lefts = enumerate_paths(q, left_deg, source=vertex, target=gen.source, limit=max_paths)
            if not lefts:
                continue
            rights = enumerate_paths(q, right_deg, source=gen.target, limit=max_paths)
            for p in lefts:
                for s in rights:
                    row = [field.zero] * ncols
                    for mid, coeff in sum_in_field.terms:
                        full = multiply_paths(multiply_paths(p, mid), s)
                        row[basis_index[full]] = field.add(row[basis_index[full]], coeff)
                    yield row


def graded_dim(
    q: WeightedQuiver,
    ideal: IdealPresentation,
    degree: int,
    vertex: str | None = None,
    field: Field = QQ,
    max_paths: int | None = DEFAULT_MAX_PATHS,
) -> int:
    """dim of the degree-d piece of kQ/I, or of its e_v corner when given.

    Over F_p the result can only overshoot the rational value (a rank can
    drop mod p, never rise), so rational and modular runs are comparable.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    basis = enumerate_paths(q, degree, source=vertex, limit=max_paths)
    if not basis:
        return 0
    index = {p: i for i, p in enumerate(basis)}
    rows = _relation_rows(q, ideal, degree, vertex, field, index, max_paths)
    r = rank_of_rows(field, rows, len(basis), stop_at=len(basis))
    return len(basis) - r


def graded_dim_naive(
    q: WeightedQuiver,
    ideal: IdealPresentation,
    degree: int,
    vertex: str | None = None,
    field: Field = QQ,
    max_paths: int | None = DEFAULT_MAX_PATHS,
) -> int:
    """Same dimension through the second-opinion dense rank routine."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    basis = enumerate_paths(q, degree, source=vertex, limit=max_paths)
    if not basis:
        return 0
    index = {p: i for i, p in enumerate(basis)}
    rows = list(_relation_rows(q, ideal, degree, vertex, field, index, max_paths))
    if not rows:
        return len(basis)
    m = Matrix.from_rows(field, rows, len(basis))
    return len(basis) - rank_naive(m)
