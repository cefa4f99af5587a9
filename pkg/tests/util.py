"""Deterministic random instance generators shared across the test modules.

Everything here takes an explicit ``random.Random`` so that every test run
sees the same instances.  Variety points for bound quivers are produced with
a hitting-set trick: zero out at least one arrow in every relation term, fill
the remaining arrows with small random integer matrices.  Each term of each
relation then evaluates to the zero matrix exactly.
"""

from collections import defaultdict
from fractions import Fraction
from random import Random

from quivrep import (
    Arrow,
    BoundQuiver,
    DimVector,
    Quiver,
    Relation,
    Representation,
    make_rep,
    random_matrix,
)


def random_acyclic_quiver(rng: Random, max_vertices: int = 5, max_arrows: int = 6) -> Quiver:
    """Quiver whose arrows always point from a higher index to a lower one."""
    n = rng.randint(2, max_vertices)
    vertices = tuple(f"v{i}" for i in range(1, n + 1))
    arrows = []
    for k in range(rng.randint(1, max_arrows)):
        j = rng.randint(2, n)
        i = rng.randint(1, j - 1)
        arrows.append(Arrow(f"a{k + 1}", f"v{j}", f"v{i}"))
    return Quiver.build(vertices, arrows)


def _paths_by_endpoints(quiver: Quiver, lengths=(2, 3)) -> dict:
    """All paths with length in ``lengths``, grouped by (source, target).

    A path is stored as a tuple of arrow names in application order from the
    right: ``(a, b)`` means "b first, then a", so consecutive names need
    ``source(a) == target(b)``.
    """
    by_target = defaultdict(list)
    for arr in quiver.arrows:
        by_target[arr.target].append(arr)
    chains = [(arr.name,) for arr in quiver.arrows]
    groups = defaultdict(list)
    max_len = max(lengths)
    while chains:
        nxt = []
        for chain in chains:
            last = quiver.arrow(chain[-1])
            for arr in by_target[last.source]:
                ext = chain + (arr.name,)
                if len(ext) in lengths:
                    groups[(arr.source, quiver.arrow(ext[0]).target)].append(ext)
                if len(ext) < max_len:
                    nxt.append(ext)
        chains = nxt
    return groups


def random_relations(rng: Random, quiver: Quiver, max_relations: int = 2) -> tuple:
    """Up to ``max_relations`` admissible relations on existing length-2/3 paths."""
    groups = [(key, paths) for key, paths in _paths_by_endpoints(quiver).items()]
    if not groups:
        return ()
    relations = []
    for _ in range(rng.randint(0, max_relations)):
        _, paths = rng.choice(groups)
        terms = rng.sample(paths, k=min(len(paths), rng.randint(1, 2)))
        combo = tuple(
            (Fraction(rng.choice([-2, -1, 1, 2])), quiver.path(names))
            for names in terms
        )
        relations.append(Relation.of(combo))
    return tuple(relations)


def random_bound_quiver(rng: Random, max_vertices: int = 5, max_arrows: int = 6,
                        max_relations: int = 2) -> BoundQuiver:
    quiver = random_acyclic_quiver(rng, max_vertices, max_arrows)
    return BoundQuiver.of(quiver, random_relations(rng, quiver, max_relations))


def random_dims(rng: Random, quiver: Quiver, max_dim: int = 3) -> DimVector:
    return DimVector.of(quiver, {v: rng.randint(0, max_dim) for v in quiver.vertices})


def hitting_set_point(rng: Random, bq: BoundQuiver, dims: DimVector,
                      bound: int = 3) -> Representation:
    """Exact variety point: one arrow of every relation term is zeroed."""
    hit = set()
    for rel in bq.relations:
        for _, path in rel.terms:
            if not set(path.arrow_names) & hit:
                hit.add(rng.choice(path.arrow_names))
    mats = {}
    for arr in bq.quiver.arrows:
        if arr.name not in hit:
            mats[arr.name] = random_matrix(dims[arr.target], dims[arr.source], rng, bound)
    return make_rep(bq.quiver, dims, mats)


def random_variety_pair(rng: Random, bq: BoundQuiver, max_dim: int = 3):
    """Two independent variety points over the same bound quiver."""
    u = hitting_set_point(rng, bq, random_dims(rng, bq.quiver, max_dim))
    v = hitting_set_point(rng, bq, random_dims(rng, bq.quiver, max_dim))
    return u, v
