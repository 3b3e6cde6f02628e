"""k-tableaux and the tropical maps from Lusztig data to BZ data."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .lusztig_finite import LusztigFinite, data_of_weight
from .maya import MayaFinite, all_maya_finite, complement_finite, fundamental_maya
from .root_data import Interval

METHODS = ("cut", "bnb", "enumerate")


@dataclass(frozen=True)
class KTableau:
    """Upper-triangular array; ``rows[p][q - p]`` is c[p, q] with 0-based p, q."""

    base: MayaFinite
    rows: tuple

    def cell(self, p: int, q: int) -> int:
        return self.rows[p][q - p]

    def cost(self, a: LusztigFinite) -> int:
        u = len(self.rows)
        return sum(a[self.cell(p, q), self.cell(p, q) + q - p] for p in range(u) for q in range(p + 1, u))


def enumerate_k_tableaux(k: MayaFinite) -> Iterator[KTableau]:
    kk = k.members
    u = len(kk)
    c = [[None] * u for _ in range(u)]
    for p in range(u):
        c[p][p] = kk[p]
    order = [(p, q) for q in range(1, u) for p in range(q - 1, -1, -1)]

    def rec(idx):
        if idx == len(order):
            yield KTableau(k, tuple(tuple(c[p][p:]) for p in range(u)))
            return
        p, q = order[idx]
        # row: c[p][q-1] <= c[p][q]; column: c[p][q] < c[p+1][q]
        for v in range(c[p][q - 1], c[p + 1][q]):
            c[p][q] = v
            yield from rec(idx + 1)

    yield from rec(0)


def _check_same(a: LusztigFinite, k: MayaFinite):
    if a.interval != k.interval:
        raise ValueError(f"datum on {a.interval} but diagram on {k.interval}")


def min_cost(a: LusztigFinite, k: MayaFinite, method: str = "cut") -> int:
    _check_same(a, k)
    if method == "enumerate":
        return min(t.cost(a) for t in enumerate_k_tableaux(k))
    kk = np.asarray(k.members, dtype=np.int64)
    if method == "cut":
        return int(kernels.min_cost_cut(a.matrix, a.interval.lo, kk))
    if method == "bnb":
        return int(kernels.min_cost_bnb(a.matrix, a.interval.lo, kk))
    raise ValueError(f"unknown method {method!r}")


def column_sums(a: LusztigFinite, k: MayaFinite) -> int:
    mat, lo = a.matrix, a.interval.lo
    return int(sum(mat[:, x - lo].sum() for x in k.members))


def row_sums(a: LusztigFinite, k: MayaFinite) -> int:
    mat, lo = a.matrix, a.interval.lo
    return int(sum(mat[x - lo, :].sum() for x in k.members))


def phi_component(a: LusztigFinite, k: MayaFinite, method: str = "cut") -> int:
    return -column_sums(a, k) + min_cost(a, k, method)


def phi_prime_component(a: LusztigFinite, k: MayaFinite, method: str = "cut") -> int:
    return -row_sums(a, k) + min_cost(a, k, method)


def phi(a: LusztigFinite, method: str = "cut"):
    from .bz_finite import BZFinite

    return BZFinite(a.interval, {k.members: phi_component(a, k, method) for k in all_maya_finite(a.interval)})


def phi_prime(a: LusztigFinite, method: str = "cut"):
    from .bz_finite import BZFinite

    return BZFinite(
        a.interval, {k.members: phi_prime_component(a, k, method) for k in all_maya_finite(a.interval)}
    )


class NotInImage(ValueError):
    """The component map is not the image of any Lusztig datum."""


MAX_INVERSE_RANK = 4


def phi_inverse(M, normalization: str = "e") -> LusztigFinite:
    """Search the finitely many data of the right weight for a preimage."""
    interval = M.interval
    if interval.m > MAX_INVERSE_RANK:
        raise ValueError(f"phi_inverse supports m <= {MAX_INVERSE_RANK}, got m = {interval.m}")
    # r_i is minus the weight coefficient, read off the appropriate fundamental diagram
    r = {}
    for i in interval:
        fund = fundamental_maya(interval, i)
        k = complement_finite(fund) if normalization == "e" else fund
        r[i] = -M[k.members]
    if any(v < 0 for v in r.values()):
        raise NotInImage("weight is not in the negative root cone")
    forward = phi if normalization == "e" else phi_prime
    for a in data_of_weight(interval, r):
        if forward(a) == M:
            return a
    raise NotInImage("no Lusztig datum maps to this component map")
