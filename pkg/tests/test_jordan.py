import random

import pytest

from nilrev import divring
from nilrev.campaign import random_nilpotent, random_nonzero_nilpotent
from nilrev.elimination import realified_rank
from nilrev.errors import NotAReverser, NotApplicable, ZeroInput
from nilrev.jordan import (
    Partition,
    chain_alternating_reverser,
    jordan_blocks,
    jordan_matrix,
    jordan_structure,
    no_unipotent_reverser_certificate,
    paired_block_witness,
    partition_of,
)
from nilrev.nilmat import Matrix, conjugate, diag, elementary, identity, mat_power, parse_matrix, zeros
from nilrev.scalar import RationalQuaternion, ScalarRing, random_scalar

RAT, QUAT = ScalarRing.RAT, ScalarRing.QUAT


def partition_by_ranks(X):
    """Independent oracle: parts of size exactly k = r(k-1) - 2 r(k) + r(k+1)."""
    n = X.n
    r = [realified_rank(mat_power(X, k)) for k in range(n + 2)]
    counts = {k: r[k - 1] - 2 * r[k] + r[k + 1] for k in range(1, n + 1)}
    return Partition(tuple((k, t) for k, t in sorted(counts.items(), reverse=True) if t))


def random_sizes(rng, n_max, distinct_min=1):
    while True:
        n = rng.randint(2, n_max)
        sizes, left = [], n
        while left:
            d = rng.randint(1, left)
            sizes.append(d)
            left -= d
        sizes.sort(reverse=True)
        if len(set(sizes)) >= distinct_min:
            return sizes


def random_gl_reverser(J, ring, rng):
    """Random invertible g with g J = -J g: (chain reverser) x (random centralizer element)."""
    n = J.n
    # (g J - J g)_{ij} = g_{i,j-1} [j-1 -> j in J] - [i -> i+1 in J] g_{i+1,j}, rational coefficients
    eqs = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                if J.rows[k][j]:
                    row[i * n + k] += 1
                if J.rows[i][k]:
                    row[k * n + j] -= 1
            eqs.append(row)
    basis = divring.kernel_basis(Matrix(eqs, RAT))
    tau = chain_alternating_reverser(J)
    while True:
        coefs = [random_scalar(ring, rng) for _ in basis]
        entries = [sum((c * v[k] for c, v in zip(coefs, basis)), ring.zero()) for k in range(n * n)]
        C = Matrix([entries[i * n : i * n + n] for i in range(n)], ring)
        if divring.rank(C.rows, ring) == n:
            return tau @ C


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0,1,0;0,0,1;0,0,0", "[3^1]"),
        ("0,0,1;0,0,0;0,0,0", "[2^1, 1^1]"),
        ("0,0,0;0,0,0;0,0,0", "[1^3]"),
    ],
)
def test_partition_examples(text, expected):
    assert str(partition_of(parse_matrix(text))) == expected


def test_partition_type():
    p = Partition.from_sizes([1, 3, 2, 1])
    assert p.parts == ((3, 1), (2, 1), (1, 2))
    assert p.n == 7 and p.s == 3
    with pytest.raises(ValueError):
        Partition(((1, 1), (2, 1)))


def test_example_ordered_basis():
    J = jordan_matrix([3, 2, 1], RAT)
    data = jordan_structure(J)
    assert [str(lab) for lab in data.basis_labels] == ["J^2e3", "Je5", "e6", "Je3", "e5", "e3"]
    assert data.J == J
    assert data.beta == identity(6)
    e = lambda k: tuple(1 if i == k - 1 else 0 for i in range(6))  # noqa: E731
    assert data.chain_tops == (e(3), e(5), e(6))
    assert data.ordered_basis == (e(1), e(4), e(6), e(2), e(5), e(3))


def test_structure_is_consistent(ring):
    rng = random.Random(f"jordan:{ring.value}")
    for _ in range(25):
        n = rng.randint(1, 8)
        X = random_nilpotent(n, ring, rng, density=rng.choice((None, 0.5, 0.2)))
        data = jordan_structure(X)
        assert data.beta @ X @ data.beta_inv == data.J
        assert data.beta @ data.beta_inv == identity(n, ring)
        assert jordan_blocks(data.J) == data.partition.sizes()
        assert data.partition == partition_by_ranks(X)
        assert data.partition.n == n
        for v, lab in zip(data.ordered_basis, data.basis_labels):
            assert list(v) == [data.beta_inv[i, lab.top - 1 - lab.power] for i in range(n)]


def test_partition_is_a_conjugation_invariant():
    from nilrev.oracle import random_signed_unipotent

    rng = random.Random("invariant")
    for _ in range(20):
        X = random_nilpotent(5, QUAT, rng, density=0.4)
        g = random_signed_unipotent(5, QUAT, rng)
        assert partition_of(conjugate(g, X)) == partition_of(X)


def test_witness_single_block():
    J = jordan_matrix([2], RAT)
    w = paired_block_witness(J, diag([1, -1]))
    assert w.block_layout == (1, 1)
    assert w.first_block == Matrix([[1]])
    assert w.paired_block == Matrix([[-1]])
    assert w.s == 1


def test_witness_example_type():
    J = jordan_matrix([3, 2, 1], RAT)
    tau = chain_alternating_reverser(J)
    assert tau @ J == -(J @ tau)
    w = paired_block_witness(J, tau)
    assert w.s == 3
    assert w.block_layout == (1, 1, 1, 1, 1, 1)
    assert w.paired_block == -w.first_block


def test_witness_errors():
    with pytest.raises(NotApplicable):
        paired_block_witness(zeros(3), identity(3))
    J = jordan_matrix([2, 1], RAT)
    with pytest.raises(NotAReverser):
        paired_block_witness(J, identity(3))
    with pytest.raises(NotAReverser):
        paired_block_witness(J, zeros(3))
    with pytest.raises(ValueError):
        paired_block_witness(parse_matrix("0,2;0,0"), diag([1, -1]))


@pytest.mark.parametrize("ring", [RAT, ScalarRing.GAUSS, QUAT], ids=lambda r: r.value)
def test_witness_on_random_gl_reversers(ring):
    rng = random.Random(f"gl:{ring.value}")
    for _ in range(15):
        sizes = random_sizes(rng, 6, distinct_min=2)
        J = jordan_matrix(sizes, ring)
        g = random_gl_reverser(J, ring, rng)
        assert g @ J == -(J @ g)
        w = paired_block_witness(J, g)
        assert w.paired_block == -w.first_block
        assert list(w.block_layout[: w.s]) == [t for _, t in Partition.from_sizes(sizes).parts]


def test_no_unipotent_reverser_examples():
    cert = no_unipotent_reverser_certificate(elementary(2, 1, 2))
    assert cert.oracle_infeasible is True and cert.verify()
    X = parse_matrix("0,1,1;0,0,1;0,0,0")
    cert = no_unipotent_reverser_certificate(X)
    assert cert.verify()
    from nilrev.oracle import reverser_feasible

    assert reverser_feasible(X).feasible
    with pytest.raises(ZeroInput):
        no_unipotent_reverser_certificate(zeros(3))


def test_no_unipotent_reverser_random(ring):
    rng = random.Random(f"nounip:{ring.value}")
    for _ in range(15):
        X = random_nonzero_nilpotent(rng.randint(2, 5), ring, rng)
        assert no_unipotent_reverser_certificate(X).verify()


def test_quaternion_chain_tops():
    i = RationalQuaternion(0, 1)
    X = Matrix([[0, i, 0], [0, 0, 0], [0, 0, 0]], QUAT)
    data = jordan_structure(X)
    assert str(data.partition) == "[2^1, 1^1]"
    assert data.beta @ X @ data.beta_inv == data.J
