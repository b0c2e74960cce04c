"""Jordan structure of strictly upper triangular matrices and the paired-block witness.

For nilpotent ``X`` we pick Jordan chain tops level by level, build the
change of basis ``beta`` with ``beta X beta^{-1} = J`` and list the chain
vectors in the interleaved order

    B = B(1) v B(2) v ... v B(d_1),   B(j) = B^{d_1-j}(d_1) v ... v B^{d_s-j}(d_s)

where ``B^l(d)`` holds ``J^l e`` for every chain top ``e`` of length ``d``.
Any ``g`` with ``g J g^{-1} = -J`` is block upper triangular in this basis,
and its diagonal block number ``s + 1`` is the negative of the first one.
A unipotent matrix has no such pair of blocks, which is why no unipotent
reverser of a nonzero nilpotent matrix exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import divring
from .errors import (
    InternalInvariantError,
    NotAReverser,
    NotApplicable,
    WitnessViolation,
    ZeroInput,
)
from .nilmat import Matrix, check_nilpotent_upper, diag, mat_power


@dataclass(frozen=True)
class Partition:
    """Block sizes as ``[(d_1, t_1), ..., (d_s, t_s)]`` with ``d_1 > ... > d_s > 0``."""

    parts: tuple

    def __post_init__(self):
        sizes = [d for d, _ in self.parts]
        if sizes != sorted(set(sizes), reverse=True) or any(d < 1 or t < 1 for d, t in self.parts):
            raise ValueError(f"not a partition in decreasing-size form: {self.parts}")

    @classmethod
    def from_sizes(cls, sizes):
        counts = {}
        for d in sizes:
            counts[d] = counts.get(d, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def n(self):
        return sum(d * t for d, t in self.parts)

    @property
    def s(self):
        return len(self.parts)

    def sizes(self):
        """Block sizes in decreasing order, with repetition."""
        return [d for d, t in self.parts for _ in range(t)]

    def __str__(self):
        return "[" + ", ".join(f"{d}^{t}" for d, t in self.parts) + "]"


@dataclass(frozen=True)
class BasisLabel:
    """``J^power e`` where ``e`` is the ``index``-th chain top of length ``size``.

    ``top`` is the 1-based coordinate of that chain top in Jordan coordinates.
    """

    size: int
    index: int
    power: int
    top: int

    def __str__(self):
        if self.power == 0:
            return f"e{self.top}"
        if self.power == 1:
            return f"Je{self.top}"
        return f"J^{self.power}e{self.top}"


@dataclass(frozen=True)
class JordanData:
    partition: Partition
    chain_tops: tuple  # column vectors (tuples) in the coordinates of X
    ordered_basis: tuple  # column vectors in the coordinates of X, in B order
    basis_labels: tuple  # BasisLabel per ordered_basis entry
    beta: Matrix
    beta_inv: Matrix
    J: Matrix

    @property
    def basis_positions(self):
        """0-based Jordan coordinate of each ordered-basis vector."""
        return tuple(lab.top - 1 - lab.power for lab in self.basis_labels)


@dataclass(frozen=True)
class PairedBlockWitness:
    conjugator_in_basis: Matrix
    block_layout: tuple
    first_block: Matrix
    paired_block: Matrix
    s: int


def jordan_matrix(sizes, ring):
    """Nilpotent Jordan matrix with blocks of the given sizes, in that order."""
    n = sum(sizes)
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for d in sizes:
        for q in range(d - 1):
            rows[offset + q][offset + q + 1] = 1
        offset += d
    return Matrix(rows, ring)


def jordan_blocks(J):
    """Block sizes of a matrix already in nilpotent Jordan form; ``None`` otherwise."""
    n = J.n
    one = J.ring.one()
    sizes = []
    start = 0
    for i in range(n):
        for j in range(n):
            x = J.rows[i][j]
            if j == i + 1:
                if x and x != one:
                    return None
            elif x:
                return None
        if i == n - 1 or not J.rows[i][i + 1]:
            sizes.append(i + 1 - start)
            start = i + 1
    return sizes


def _ordered_layout(sizes):
    """Labels in B order plus the segment sizes, for Jordan blocks listed in ``sizes``."""
    partition = Partition.from_sizes(sizes)
    tops = {}
    offset = 0
    for d in sizes:
        offset += d
        tops.setdefault(d, []).append(offset)
    labels = []
    layout = []
    d1 = partition.parts[0][0]
    for j in range(1, d1 + 1):
        for d, t in partition.parts:
            power = d - j
            if power < 0:
                continue
            layout.append(t)
            for idx, top in enumerate(tops[d], start=1):
                labels.append(BasisLabel(d, idx, power, top))
    return partition, labels, layout


def _chain_tops(X, powers):
    ring = X.ring
    m = len(powers) - 1  # X**m == 0
    kernels = [[]] + [divring.kernel_basis(powers[k]) for k in range(1, m + 1)]
    chosen = []
    for k in range(m, 0, -1):
        span = list(kernels[k - 1])
        span += [divring.apply(powers[d - k], v) for v, d in chosen if d > k]
        current = divring.columns_rank(span, ring)
        for w in kernels[k]:
            r = divring.columns_rank(span + [w], ring)
            if r > current:
                span.append(w)
                current = r
                chosen.append((w, k))
    return chosen


def jordan_structure(X):
    """Partition, chain tops, ordered basis and change of basis for strictly upper ``X``.

    Chain tops are taken greedily from the kernel bases of ``X**k`` (one basis
    vector per free column, lowest column first), from the longest chains
    down, skipping vectors already in the span of shorter kernels and of the
    chains chosen so far.  The result is deterministic.
    """
    check_nilpotent_upper(X)
    n, ring = X.n, X.ring
    powers = [mat_power(X, 0)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ X)
    chosen = _chain_tops(X, powers)

    columns = []
    sizes = []
    for v, d in chosen:
        for power in range(d - 1, -1, -1):
            columns.append(divring.apply(powers[power], v))
        sizes.append(d)
    P = divring.from_columns(columns, ring)
    beta = divring.invert(P)
    J = jordan_matrix(sizes, ring)
    if beta @ X @ P != J:
        raise InternalInvariantError("change of basis does not conjugate X to its Jordan form")

    partition, labels, _ = _ordered_layout(sizes)
    ordered = tuple(tuple(columns[lab.top - 1 - lab.power]) for lab in labels)
    return JordanData(
        partition=partition,
        chain_tops=tuple(tuple(v) for v, _ in chosen),
        ordered_basis=ordered,
        basis_labels=tuple(labels),
        beta=beta,
        beta_inv=P,
        J=J,
    )


def partition_of(X):
    return jordan_structure(X).partition


def chain_alternating_reverser(J):
    """Diagonal ``g`` with ``g J^l e = (-1)^l J^l e`` on every chain; reverses ``J``."""
    sizes = jordan_blocks(J)
    if sizes is None:
        raise ValueError("matrix is not in nilpotent Jordan form")
    signs = []
    for d in sizes:
        signs.extend((-1) ** (d - 1 - q) for q in range(d))
    return diag(signs, J.ring)


def paired_block_witness(J, g):
    """Express a reverser ``g`` of the Jordan matrix ``J`` in the ordered basis.

    Checks that ``[g]_B`` is block upper triangular (one block per nonempty
    ``B^l(d)``) and that diagonal block ``s + 1`` equals minus block 1.
    Raises :class:`NotAReverser` unless ``g J = -J g`` with ``g`` invertible,
    :class:`NotApplicable` for ``J = 0`` and :class:`WitnessViolation` if the
    block structure fails.
    """
    sizes = jordan_blocks(J)
    if sizes is None:
        raise ValueError("J is not in nilpotent Jordan form")
    if J.is_zero():
        raise NotApplicable("every invertible matrix reverses J = 0; the block claims are vacuous")
    if g.n != J.n or g.ring is not J.ring:
        raise NotAReverser("g and J differ in size or ring")
    if g @ J != -(J @ g):
        raise NotAReverser("g J != -J g")
    if divring.rank(g.rows, g.ring) != g.n:
        raise NotAReverser("g is singular")

    partition, labels, layout = _ordered_layout(sizes)
    pos = [lab.top - 1 - lab.power for lab in labels]
    n = J.n
    gb = Matrix._raw(tuple(tuple(g.rows[pos[a]][pos[b]] for b in range(n)) for a in range(n)), g.ring)

    segment = []
    for k, t in enumerate(layout):
        segment.extend([k] * t)
    for a in range(n):
        for b in range(n):
            if segment[b] < segment[a] and gb.rows[a][b]:
                raise WitnessViolation(
                    f"[g]_B has a nonzero entry below the block diagonal at ({a + 1}, {b + 1})"
                )

    def block(k):
        start = sum(layout[:k])
        t = layout[k]
        return Matrix._raw(
            tuple(tuple(gb.rows[start + a][start + b] for b in range(t)) for a in range(t)), g.ring
        )

    s = partition.s
    first, paired = block(0), block(s)
    if paired != -first:
        raise WitnessViolation("diagonal block s+1 is not the negative of the first block")
    return PairedBlockWitness(
        conjugator_in_basis=gb,
        block_layout=tuple(layout),
        first_block=first,
        paired_block=paired,
        s=s,
    )


@dataclass(frozen=True)
class NoUnipotentReverserCertificate:
    """Why no unipotent ``a`` satisfies ``a X a^{-1} = -X``.

    If one did, ``beta a beta^{-1}`` would be a unipotent reverser of
    ``J = beta X beta^{-1}``.  ``witness`` shows, on an explicit reverser of
    ``J``, the structure every reverser of ``J`` has in the ordered basis:
    block upper triangular with diagonal block ``s + 1`` equal to minus the
    first block, so ``c`` and ``-c`` both occur among its diagonal values.
    In a unipotent matrix every diagonal value is 1.
    """

    X: Matrix
    jordan: JordanData
    reverser_of_J: Matrix
    witness: PairedBlockWitness
    oracle_infeasible: bool | None = None
    notes: tuple = field(default=())

    def verify(self):
        """Recheck every identity the record claims, by exact arithmetic."""
        data = self.jordan
        if data.beta @ self.X @ data.beta_inv != data.J:
            return False
        if data.beta @ data.beta_inv != mat_power(data.J, 0):
            return False
        w = paired_block_witness(data.J, self.reverser_of_J)
        return (
            w.block_layout == self.witness.block_layout
            and w.paired_block == -w.first_block
            and w.first_block == self.witness.first_block
            and self.oracle_infeasible is not False
        )


def no_unipotent_reverser_certificate(X, cross_check=True, dim_limit=None):
    """Certificate that the nonzero strictly upper ``X`` has no reverser in ``U_n``.

    With ``cross_check`` the linear-feasibility oracle is also run over the
    unipotent group and must report infeasibility; a feasible answer would
    contradict the structural argument and raises :class:`InternalInvariantError`.
    """
    check_nilpotent_upper(X)
    if X.is_zero():
        raise ZeroInput("X = 0 is reversed by the identity")
    data = jordan_structure(X)
    tau = chain_alternating_reverser(data.J)
    witness = paired_block_witness(data.J, tau)
    oracle_infeasible = None
    if cross_check:
        from .oracle import GroupTag, reverser_feasible

        result = reverser_feasible(X, GroupTag.UNIPOTENT, dim_limit=dim_limit)
        oracle_infeasible = not result.feasible
        if result.feasible:
            raise InternalInvariantError("oracle found a unipotent reverser of a nonzero X")
    return NoUnipotentReverserCertificate(
        X=X,
        jordan=data,
        reverser_of_J=tau,
        witness=witness,
        oracle_infeasible=oracle_infeasible,
        notes=(
            f"partition {data.partition}",
            f"block {witness.s + 1} of [g]_B equals minus block 1 for every reverser g of J",
        ),
    )


__all__ = [
    "Partition",
    "BasisLabel",
    "JordanData",
    "PairedBlockWitness",
    "NoUnipotentReverserCertificate",
    "jordan_matrix",
    "jordan_blocks",
    "jordan_structure",
    "partition_of",
    "chain_alternating_reverser",
    "paired_block_witness",
    "no_unipotent_reverser_certificate",
]
