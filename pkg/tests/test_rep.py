from fractions import Fraction as F
from random import Random

import pytest

from quivrep import (
    Arrow,
    BoundQuiver,
    CocycleElement,
    DimVector,
    MatrixQ,
    Quiver,
    Relation,
    conjugate,
    direct_sum,
    make_rep,
    middle_term,
    simple_rep,
    twisted_evaluate,
    zero_rep,
)
from quivrep.errors import NotACocycle, NotAVarietyPoint, ShapeMismatch
from quivrep.rep import cocycle_ambient_dim, require_variety_point


def a3_bound():
    q = Quiver.build(
        ("x1", "x2", "x3"),
        (Arrow("alpha", "x2", "x1"), Arrow("beta", "x3", "x2")),
    )
    rel = Relation.of([(F(1), q.path(["alpha", "beta"]))])
    return BoundQuiver.of(q, [rel])


def test_make_rep_shapes_and_zero_fill():
    bq = a3_bound()
    m = make_rep(bq.quiver, {"x1": 1, "x2": 2, "x3": 1}, {"alpha": [[1, 0]]})
    assert m.matrix("alpha").shape == (1, 2)
    assert m.matrix("beta").is_zero() and m.matrix("beta").shape == (2, 1)
    with pytest.raises(ShapeMismatch):
        make_rep(bq.quiver, {"x1": 1, "x2": 2, "x3": 1}, {"alpha": [[1]]})


def test_evaluate_path_applies_rightmost_first():
    q = a3_bound().quiver
    m = make_rep(q, {"x1": 1, "x2": 1, "x3": 1},
                 {"alpha": [[2]], "beta": [[3]]})
    p = q.path(["alpha", "beta"])
    assert m.evaluate_path(p) == MatrixQ.from_rows([[6]])
    e = q.trivial_path("x2")
    assert m.evaluate_path(e) == MatrixQ.identity(1)


def test_variety_point_detection():
    bq = a3_bound()
    good = make_rep(bq.quiver, (1, 1, 1), {"alpha": [[1]], "beta": [[0]]})
    bad = make_rep(bq.quiver, (1, 1, 1), {"alpha": [[1]], "beta": [[1]]})
    assert good.is_variety_point(bq)
    assert not bad.is_variety_point(bq)
    require_variety_point(good, bq)
    with pytest.raises(NotAVarietyPoint):
        require_variety_point(bad, bq)


def test_direct_sum_blocks():
    q = a3_bound().quiver
    m = make_rep(q, (1, 1, 0), {"alpha": [[2]]})
    n = make_rep(q, (1, 1, 1), {"alpha": [[3]], "beta": [[1]]})
    s = direct_sum(m, n)
    assert s.dim.as_dict() == {"x1": 2, "x2": 2, "x3": 1}
    assert s.matrix("alpha") == MatrixQ.from_rows([[2, 0], [0, 3]])
    # the beta block only has the n-part
    assert s.matrix("beta") == MatrixQ.from_rows([[0], [1]])


def test_conjugate_preserves_relations_and_acts_as_expected():
    bq = a3_bound()
    m = make_rep(bq.quiver, (1, 2, 1),
                 {"alpha": [[1, 0]], "beta": [[0], [1]]})
    assert m.is_variety_point(bq)
    g = {
        "x1": MatrixQ.from_rows([[2]]),
        "x2": MatrixQ.from_rows([[1, 1], [0, 1]]),
        "x3": MatrixQ.identity(1),
    }
    c = conjugate(m, g)
    assert c.is_variety_point(bq)
    # g_target M g_source^{-1}
    assert c.matrix("alpha") == MatrixQ.from_rows([[2, -2]])
    assert c.matrix("beta") == MatrixQ.from_rows([[1], [1]])


def test_zero_and_simple():
    q = a3_bound().quiver
    z = zero_rep(q)
    assert z.dim.total == 0
    s = simple_rep(q, "x2")
    assert s.dim.as_dict() == {"x1": 0, "x2": 1, "x3": 0}
    assert s.matrix("alpha").shape == (0, 1)


def test_cocycle_element_validation_and_flatten():
    bq = a3_bound()
    q = bq.quiver
    sub = DimVector.of(q, (1, 1, 0))
    quot = DimVector.of(q, (0, 1, 1))
    # arrow alpha: sub[x1] x quot[x2] = 1x1; beta: sub[x2] x quot[x3] = 1x1
    z = CocycleElement.of(q, sub, quot, [
        MatrixQ.from_rows([[5]]),
        MatrixQ.from_rows([[7]]),
    ])
    assert cocycle_ambient_dim(q, sub, quot) == 2
    flat = z.flatten()
    assert flat == (F(5), F(7))
    back = CocycleElement.from_flat(q, sub, quot, flat)
    assert back == z
    doubled = z + z
    assert doubled.matrix("alpha")[0, 0] == 10
    assert z.scale(F(1, 5)).matrix("alpha")[0, 0] == 1
    with pytest.raises(ShapeMismatch):
        CocycleElement.of(q, sub, quot, [MatrixQ.zeros(2, 2), MatrixQ.zeros(1, 1)])


def test_twisted_evaluate_is_linear():
    bq = a3_bound()
    q = bq.quiver
    rng = Random(11)
    u = make_rep(q, (2, 1, 1), {"alpha": [[1], [0]], "beta": [[0]]})
    v = make_rep(q, (1, 2, 1), {"alpha": [[0, 1]], "beta": [[1], [0]]})
    rel = bq.relations[0]
    sub, quot = u.dim, v.dim

    def rand_z():
        flat = [F(rng.randint(-4, 4)) for _ in range(cocycle_ambient_dim(q, sub, quot))]
        return CocycleElement.from_flat(q, sub, quot, flat)

    for _ in range(20):
        z1, z2 = rand_z(), rand_z()
        c = F(rng.randint(-3, 3), rng.choice([1, 2, 3]))
        lhs = twisted_evaluate(z1 + z2.scale(c), rel, u, v)
        rhs = twisted_evaluate(z1, rel, u, v) + twisted_evaluate(z2, rel, u, v).scale(c)
        assert lhs == rhs


def test_middle_term_blocks_and_validation():
    bq = a3_bound()
    q = bq.quiver
    u = make_rep(q, (1, 1, 1), {"alpha": [[1]], "beta": [[0]]})
    v = make_rep(q, (1, 1, 1), {"alpha": [[0]], "beta": [[1]]})
    sub, quot = u.dim, v.dim
    # twisted constraint for z = (z_alpha, z_beta):
    #   Z_alpha V_beta + U_alpha Z_beta = z_alpha * 1 + 1 * z_beta
    good = CocycleElement.from_flat(q, sub, quot, (F(2), F(-2)))
    w = middle_term(good, u, v, bq)
    assert w.dim.as_dict() == {"x1": 2, "x2": 2, "x3": 2}
    assert w.matrix("alpha") == MatrixQ.from_rows([[1, 2], [0, 0]])
    assert w.is_variety_point(bq)
    bad = CocycleElement.from_flat(q, sub, quot, (F(1), F(1)))
    with pytest.raises(NotACocycle):
        middle_term(bad, u, v, bq)
    # without the bound quiver no validation happens
    raw = middle_term(bad, u, v)
    assert not raw.is_variety_point(bq)
