"""Random instance generators and seeded property campaigns.

Every trial draws from its own ``random.Random`` seeded by a string built
from the mode, ring, campaign seed and trial index, so trials are
independent and a report depends only on its flags.
"""

from __future__ import annotations

from random import Random

from .certificate import GroupTag, check_certificate
from .errors import NilrevError
from .expmap import exp
from .nilmat import Matrix, format_matrix, identity
from .oracle import group_reverser_feasible, random_signed_unipotent, reverser_feasible
from .reverser import reverse_star
from .scalar import ScalarRing, random_scalar

MODES = ("thm11", "thm14", "cor12", "search")


def random_nilpotent(n, ring, rng, star=False, density=None):
    """Random strictly upper matrix.

    ``star`` forces a nonzero first superdiagonal (resampling zeros).  Other
    entries are kept with probability ``density`` (default 1).
    """
    rows = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if star and j == i + 1:
                rows[i][j] = random_scalar(ring, rng, nonzero=True)
            elif density is None or rng.random() < density:
                rows[i][j] = random_scalar(ring, rng)
    return Matrix._raw(tuple(tuple(r) for r in rows), ring)


def random_star(n, ring, rng):
    """Nonzero-superdiagonal matrix, alternating between dense and sparse fills."""
    density = rng.choice((None, 0.3, 0.0))
    return random_nilpotent(n, ring, rng, star=True, density=density)


def random_nonzero_nilpotent(n, ring, rng):
    """Nonzero strictly upper matrix, star or not, dense or sparse."""
    if n < 2:
        raise ValueError("u_1 has no nonzero element")
    while True:
        star = rng.random() < 0.3
        X = random_nilpotent(n, ring, rng, star=star, density=rng.choice((None, 0.5, 0.2)))
        if not X.is_zero():
            return X


def random_unipotent_star(n, ring, rng):
    """Unit-diagonal upper matrix with nonzero first superdiagonal."""
    X = random_star(n, ring, rng)
    return X + identity(n, ring)


def _trial_rng(mode, ring, seed, t):
    return Random(f"{mode}:{ring.value}:{seed}:{t}")


def _trial(mode, ring, n, rng):
    """Run one trial; returns ``(ok, instance_text, detail)``."""
    if mode == "thm14":
        X = random_star(n, ring, rng)
        try:
            ok = check_certificate(reverse_star(X))
        except NilrevError as exc:
            return False, format_matrix(X), repr(exc)
        return ok, format_matrix(X), "certificate"
    if mode == "thm11":
        X = random_nonzero_nilpotent(n, ring, rng)
        result = reverser_feasible(X, GroupTag.UNIPOTENT)
        return not result.feasible, format_matrix(X), result.status
    if mode == "cor12":
        X = random_nonzero_nilpotent(n, ring, rng)
        result = group_reverser_feasible(exp(X), GroupTag.UNIPOTENT)
        return not result.feasible, format_matrix(X), result.status
    if mode == "search":
        u = random_signed_unipotent(n, ring, rng)
        result = group_reverser_feasible(u, GroupTag.SIGNED_UNIPOTENT)
        return result.feasible, format_matrix(u), result.status
    raise ValueError(f"unknown campaign mode {mode!r}")


def run_campaign(mode, ring=ScalarRing.RAT, n_max=5, trials=100, seed=0):
    """Run ``trials`` seeded trials with sizes drawn uniformly from 2..n_max.

    ``failures`` lists every trial that contradicts the targeted statement.
    In ``search`` mode an infeasible instance is a *candidate* non-real
    element; it is listed under ``candidates`` and does not fail the run.
    """
    if mode not in MODES:
        raise ValueError(f"unknown campaign mode {mode!r}; expected one of {MODES}")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    successes = 0
    failures = []
    candidates = []
    sizes = {}
    for t in range(trials):
        rng = _trial_rng(mode, ring, seed, t)
        n = rng.randint(2, n_max)
        sizes[n] = sizes.get(n, 0) + 1
        ok, text, detail = _trial(mode, ring, n, rng)
        if ok:
            successes += 1
        elif mode == "search":
            candidates.append({"trial": t, "n": n, "matrix": text})
        else:
            failures.append({"trial": t, "n": n, "matrix": text, "detail": detail})
    report = {
        "mode": mode,
        "ring": ring.value,
        "n_max": n_max,
        "trials": trials,
        "seed": seed,
        "successes": successes,
        "failures": failures,
        "sizes": {str(k): sizes[k] for k in sorted(sizes)},
        "ok": not failures,
    }
    if mode == "search":
        report["candidates"] = candidates
    return report
