import os
import random

import pytest

from nilrev.campaign import random_nonzero_nilpotent, random_star
from nilrev.certificate import GroupTag, Level, Method, check_certificate, make_certificate
from nilrev.errors import DimensionTooLarge
from nilrev.expmap import exp
from nilrev.nilmat import diag, elementary, identity, parse_matrix, zeros
from nilrev.oracle import (
    DEFAULT_DIM_LIMIT,
    dim_limit,
    group_reverser_feasible,
    nonreal_search,
    reverser_feasible,
    sign_patterns,
)
from nilrev.reverser import reverse_star

U, S = GroupTag.UNIPOTENT, GroupTag.SIGNED_UNIPOTENT


def test_sign_patterns_gray_order():
    pats = list(sign_patterns(3, S))
    assert pats == [(1, 1, 1), (1, -1, 1), (1, -1, -1), (1, 1, -1)]
    full = list(sign_patterns(3, S, normalize=False))
    assert len(full) == 8 == len(set(full)) and full[0] == (1, 1, 1)
    for a, b in zip(full, full[1:]):
        assert sum(x != y for x, y in zip(a, b)) == 1
    assert list(sign_patterns(4, U)) == [(1, 1, 1, 1)]


def test_algebra_examples():
    assert not reverser_feasible(elementary(2, 1, 2), U).feasible
    r = reverser_feasible(zeros(3), U)
    assert r.feasible and r.g == identity(3) and r.patterns_tried == 1
    X = parse_matrix("0,1,1;0,0,1;0,0,0")
    r = reverser_feasible(X, S)
    assert r.feasible and r.status == "FEASIBLE"
    mine = make_certificate(X, r.g, Level.ALGEBRA, Method.ORACLE, S)
    assert check_certificate(mine) and check_certificate(reverse_star(X))


def test_group_examples():
    r = group_reverser_feasible(identity(3), U)
    assert r.feasible and r.g == identity(3)
    u = parse_matrix("1,1;0,1")
    assert group_reverser_feasible(u, U).status == "INFEASIBLE"
    r = group_reverser_feasible(u, S)
    assert r.feasible and r.g == diag([1, -1]) and r.level is Level.GROUP


def test_theorem_agreement(ring):
    rng = random.Random(f"oracle:{ring.value}")
    for _ in range(15):
        n = rng.randint(2, 5)
        X = random_nonzero_nilpotent(n, ring, rng)
        assert not reverser_feasible(X, U).feasible
        assert not group_reverser_feasible(exp(X), U).feasible
        Y = random_star(n, ring, rng)
        r = reverser_feasible(Y, S)
        assert r.feasible
        assert check_certificate(make_certificate(Y, r.g, Level.ALGEBRA, Method.ORACLE, S))


def test_normalization_agrees(ring):
    rng = random.Random(f"normalize:{ring.value}")
    for _ in range(15):
        n = rng.randint(2, 4)
        X = random_nonzero_nilpotent(n, ring, rng)
        a = reverser_feasible(X, S, normalize=True)
        b = reverser_feasible(X, S, normalize=False)
        assert a.feasible == b.feasible
        assert b.patterns_tried <= 2 ** n


def test_dimension_bound(monkeypatch):
    X = zeros(DEFAULT_DIM_LIMIT + 1)
    with pytest.raises(DimensionTooLarge):
        reverser_feasible(X)
    assert reverser_feasible(X, dim_limit=DEFAULT_DIM_LIMIT + 1).feasible
    monkeypatch.setenv("NILREV_DIM_LIMIT", "2")
    assert dim_limit() == 2
    with pytest.raises(DimensionTooLarge):
        group_reverser_feasible(identity(3))
    monkeypatch.delenv("NILREV_DIM_LIMIT")
    assert dim_limit() == DEFAULT_DIM_LIMIT == 8
    assert "NILREV_DIM_LIMIT" not in os.environ


def test_search_reports():
    empty = nonreal_search(3, ScalarRingRat(), 0)
    assert empty.sampled == 0 and empty.infeasible == [] and empty.to_dict()["diagonal_patterns"] == {}
    r2 = nonreal_search(2, ScalarRingRat(), 100)
    assert r2.sampled == 100 and r2.feasible == 100 and r2.infeasible == []
    r3 = nonreal_search(3, ScalarRingRat(), 1000, seed=3)
    d = r3.to_dict()
    assert d["sampled"] == 1000 == d["feasible"] + len(d["infeasible"])
    assert sum(d["diagonal_patterns"].values()) == 1000
    assert nonreal_search(3, ScalarRingRat(), 50, seed=3).to_dict() == nonreal_search(3, ScalarRingRat(), 50, seed=3).to_dict()


def ScalarRingRat():
    from nilrev.scalar import ScalarRing

    return ScalarRing.RAT
