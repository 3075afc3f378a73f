"""Seeded random instances: quivers, relations, representations, morphisms.

Every generator takes an explicit ``random.Random`` so a trial is replayable
from its seed string alone.  Nothing here reads global RNG state.

Random morphisms are drawn from the actual space of morphisms: the
commuting-square conditions are linear in the blocks, so we assemble that
linear system, compute its nullspace, and take a random combination of the
basis.  This can legitimately produce the zero morphism when the space is
small; callers who need nonzero morphisms should retry with another trial.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .fields import QQ, Field, PrimeField, Scalar
from .linalg import Matrix, nullspace
from .paths import IdealPresentation, PathSum, UniformElement, enumerate_paths
from .quiver import Arrow, WeightedQuiver
from .representation import DegreeWindow, GradedMorphism, GradedRep, Slot


def rng_for(*parts) -> random.Random:
    """One stream per (seed, suite, trial, ...) coordinate tuple."""
    return random.Random("|".join(str(p) for p in parts))


def random_scalar(rng: random.Random, field: Field, nonzero: bool = False) -> Scalar:
    if isinstance(field, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, field.p)
    while True:
        value = Fraction(rng.randint(-2, 2))
        if not nonzero or value != 0:
            return value


def random_quiver(
    rng: random.Random,
    max_vertices: int = 4,
    max_arrows: int = 6,
    max_degree: int = 3,
    require_heavy: bool = False,
) -> WeightedQuiver:
    """A small random weighted quiver; ``require_heavy`` forces an arrow of
    degree at least two so a split is always available."""
    nv = rng.randint(1, max_vertices)
    vertices = [f"u{i}" for i in range(1, nv + 1)]
    na = rng.randint(1, max_arrows)
    arrows = []
    for i in range(1, na + 1):
        arrows.append(
            Arrow(
                f"a{i}",
                rng.choice(vertices),
                rng.choice(vertices),
                rng.randint(1, max_degree),
            )
        )
    if require_heavy and all(a.degree < 2 for a in arrows):
        k = rng.randrange(len(arrows))
        a = arrows[k]
        arrows[k] = Arrow(a.name, a.source, a.target, rng.randint(2, max_degree))
    return WeightedQuiver.build(vertices, arrows)


_PATH_GUARD = 5000


def random_relation(
    rng: random.Random, q: WeightedQuiver, max_degree: int = 4
) -> UniformElement | None:
    """A random uniform element of degree >= 2, or None if the quiver has no
    such paths (short acyclic quivers run out)."""
    degrees = list(range(2, max_degree + 1))
    rng.shuffle(degrees)
    for degree in degrees:
        paths = enumerate_paths(q, degree, limit=_PATH_GUARD)
        buckets: dict[tuple[str, str], list] = {}
        for p in paths:
            buckets.setdefault((p.source, p.target), []).append(p)
        if not buckets:
            continue
        group = buckets[rng.choice(sorted(buckets))]
        count = rng.randint(1, min(3, len(group)))
        chosen = rng.sample(group, count)
        terms = [(p, random_scalar(rng, QQ, nonzero=True)) for p in chosen]
        return UniformElement.from_sum(PathSum.make(QQ, terms))
    return None


def random_ideal(
    rng: random.Random, q: WeightedQuiver, max_generators: int = 3, max_degree: int = 4
) -> IdealPresentation:
    gens = []
    for _ in range(rng.randint(1, max_generators)):
        gen = random_relation(rng, q, max_degree)
        if gen is not None:
            gens.append(gen)
    return IdealPresentation.of(gens)


def random_composable_pair(
    rng: random.Random, q: WeightedQuiver, max_degree: int = 3
) -> tuple[UniformElement, UniformElement] | None:
    """Two uniform elements with matching middle vertex, for product laws."""
    d1 = rng.randint(1, max_degree)
    d2 = rng.randint(1, max_degree)
    left_paths = enumerate_paths(q, d1, limit=_PATH_GUARD)
    if not left_paths:
        return None
    buckets: dict[tuple[str, str], list] = {}
    for p in left_paths:
        buckets.setdefault((p.source, p.target), []).append(p)
    key = rng.choice(sorted(buckets))
    group = buckets[key]
    chosen = rng.sample(group, rng.randint(1, min(2, len(group))))
    left = UniformElement.from_sum(
        PathSum.make(QQ, [(p, random_scalar(rng, QQ, nonzero=True)) for p in chosen])
    )
    right_paths = enumerate_paths(q, d2, source=left.target, limit=_PATH_GUARD)
    rbuckets: dict[tuple[str, str], list] = {}
    for p in right_paths:
        rbuckets.setdefault((p.source, p.target), []).append(p)
    if not rbuckets:
        return None
    rkey = rng.choice(sorted(rbuckets))
    rgroup = rbuckets[rkey]
    rchosen = rng.sample(rgroup, rng.randint(1, min(2, len(rgroup))))
    right = UniformElement.from_sum(
        PathSum.make(QQ, [(p, random_scalar(rng, QQ, nonzero=True)) for p in rchosen])
    )
    return left, right


def random_rep(
    rng: random.Random,
    q: WeightedQuiver,
    window: DegreeWindow,
    field: Field,
    max_dim: int = 3,
) -> GradedRep:
    """Random dimensions and matrices on every slot; relations not imposed."""
    dims: dict[Slot, int] = {}
    for v in q.vertices:
        for d in window.degrees():
            dims[(v, d)] = rng.randint(0, max_dim)
    mats: dict[Slot, Matrix] = {}
    for a in q.arrows:
        for d in window.degrees():
            if not window.contains(d + a.degree):
                continue
            rows_n = dims[(a.target, d + a.degree)]
            cols_n = dims[(a.source, d)]
            entries = [
                [random_scalar(rng, field) for _ in range(cols_n)] for _ in range(rows_n)
            ]
            mats[(a.name, d)] = Matrix.from_rows(field, entries, cols_n)
    return GradedRep(q, window, field, dims, mats)


def random_morphism(
    rng: random.Random, source: GradedRep, target: GradedRep
) -> GradedMorphism:
    """A random point of the space of morphisms from source to target.

    Blocks are defined on every slot present in both representations.  The
    commuting squares are linear constraints on the block entries; we solve
    them exactly and randomize over the solution space.
    """
    if source.quiver != target.quiver or source.window != target.window:
        raise ValueError("morphism endpoints must share quiver and window")
    if source.field != target.field:
        raise ValueError("morphism endpoints must share the field")
    field = source.field
    slots = sorted(set(source.dims) & set(target.dims))
    shapes = {s: (target.dims[s], source.dims[s]) for s in slots}
    var_index: dict[tuple[Slot, int, int], int] = {}
    for slot in slots:
        r, c = shapes[slot]
        for i in range(r):
            for j in range(c):
                var_index[(slot, i, j)] = len(var_index)
    nvars = len(var_index)
    rows: list[list[Scalar]] = []
    for (name, d) in sorted(source.mats):
        a = source.quiver.arrow(name)
        skey = (a.source, d)
        tkey = (a.target, d + a.degree)
        b_mat = target.mats.get((name, d))
        if b_mat is None or skey not in shapes or tkey not in shapes:
            continue
        a_mat = source.mats[(name, d)]
        nb_t, na_t = shapes[tkey]
        nb_s, na_s = shapes[skey]
        # one equation per entry of (phi_t A - B phi_s), an (nb_t x na_s) block
        for i in range(nb_t):
            for j in range(na_s):
                row = [field.zero] * nvars
                for k in range(na_t):
                    row[var_index[(tkey, i, k)]] = field.add(
                        row[var_index[(tkey, i, k)]], a_mat.get(k, j)
                    )
                for k in range(nb_s):
                    idx = var_index[(skey, k, j)]
                    row[idx] = field.sub(row[idx], b_mat.get(i, k))
                if any(not field.is_zero(x) for x in row):
                    rows.append(row)
    values = [field.zero] * nvars
    if nvars:
        system = Matrix.from_rows(field, rows, nvars)
        basis = nullspace(system)
        for j in range(basis.cols):
            coeff = random_scalar(rng, field)
            if field.is_zero(coeff):
                continue
            for i in range(nvars):
                values[i] = field.add(values[i], field.mul(coeff, basis.get(i, j)))
    blocks: dict[Slot, Matrix] = {}
    for slot in slots:
        r, c = shapes[slot]
        entries = [[values[var_index[(slot, i, j)]] for j in range(c)] for i in range(r)]
        blocks[slot] = Matrix.from_rows(field, entries, c)
    return GradedMorphism(source, target, blocks)
