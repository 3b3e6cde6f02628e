"""BZ data over a finite interval.

Components are stored in an integer array indexed by bitmask over the
extended interval (bit b stands for lo + b).  The empty and full masks hold
the conventional value 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Mapping

import numpy as np

from .lusztig_finite import LusztigFinite
from .lusztig_finite import apply as apply_lusztig
from .lusztig_finite import epsilon as epsilon_lusztig
from .maya import MayaFinite, all_maya_finite, complement_finite, fundamental_maya
from .root_data import Interval, WeightVector


def to_mask(interval: Interval, members) -> int:
    lo = interval.lo
    mask = 0
    for x in members:
        mask |= 1 << (x - lo)
    return mask


def from_mask(interval: Interval, mask: int) -> tuple:
    return tuple(interval.lo + b for b in range(interval.m + 1) if mask >> b & 1)


@dataclass(frozen=True)
class BZFinite:
    interval: Interval
    values: tuple

    def __init__(self, interval: Interval, components):
        """``components`` maps member tuples (or MayaFinite) to integers, or is a
        full mask-indexed sequence of length 2^(m+1)."""
        size = 1 << (interval.m + 1)
        if isinstance(components, Mapping):
            vals = [None] * size
            vals[0] = vals[size - 1] = 0
            for key, v in components.items():
                members = key.members if isinstance(key, MayaFinite) else tuple(key)
                mask = to_mask(interval, members)
                if mask in (0, size - 1):
                    if v != 0:
                        raise ValueError("components at the empty and full diagrams are 0")
                    continue
                vals[mask] = int(v)
            missing = [from_mask(interval, m) for m, v in enumerate(vals) if v is None]
            if missing:
                raise ValueError(f"missing components for {missing[:5]}")
        else:
            vals = [int(v) for v in components]
            if len(vals) != size:
                raise ValueError("component array has the wrong length")
            vals[0] = vals[size - 1] = 0
        object.__setattr__(self, "interval", interval)
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def zero(cls, interval: Interval) -> "BZFinite":
        return cls(interval, [0] * (1 << (interval.m + 1)))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.values, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __getitem__(self, key) -> int:
        members = key.members if isinstance(key, MayaFinite) else tuple(key)
        return self.values[to_mask(self.interval, members)]

    def components(self) -> dict:
        return {k.members: self[k] for k in all_maya_finite(self.interval)}

    def with_component(self, members, value: int) -> "BZFinite":
        vals = list(self.values)
        vals[to_mask(self.interval, members)] = int(value)
        return BZFinite(self.interval, vals)

    def to_json(self) -> dict:
        return {
            "lo": self.interval.lo,
            "hi": self.interval.hi,
            "components": [{"k": list(k), "M": v} for k, v in self.components().items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BZFinite":
        interval = Interval(int(obj["lo"]), int(obj["hi"]))
        comps = {}
        for c in obj["components"]:
            key = tuple(sorted(int(x) for x in c["k"]))
            if key in comps:
                raise ValueError(f"duplicate component {key}")
            comps[key] = int(c["M"])
        return cls(interval, comps)


# -- validation on raw mask arrays ------------------------------------------

def edge_violations(arr: np.ndarray, n: int, limit: int | None = None) -> list:
    """Witnesses (i, j, K) of bit positions where the edge inequality fails."""
    masks = np.arange(1 << n)
    out = []
    for i, j in combinations(range(n), 2):
        bi, bj = 1 << i, 1 << j
        base = masks[(masks & (bi | bj)) == 0]
        bad = arr[base | bi] + arr[base | bj] > arr[base | bi | bj] + arr[base]
        out.extend((i, j, int(m)) for m in base[bad])
        if limit is not None and len(out) >= limit:
            return out[:limit]
    return out


def plucker_violations(arr: np.ndarray, n: int, limit: int | None = None) -> list:
    """Witnesses (i, j, k, K) of bit positions where the tropical Plucker relation fails."""
    masks = np.arange(1 << n)
    out = []
    for i, j, k in combinations(range(n), 3):
        bi, bj, bk = 1 << i, 1 << j, 1 << k
        base = masks[(masks & (bi | bj | bk)) == 0]
        lhs = arr[base | bi | bk] + arr[base | bj]
        rhs = np.minimum(arr[base | bi | bj] + arr[base | bk], arr[base | bj | bk] + arr[base | bi])
        out.extend((i, j, k, int(m)) for m in base[lhs != rhs])
        if limit is not None and len(out) >= limit:
            return out[:limit]
    return out


def check_edge_inequalities(M: BZFinite, limit: int | None = None) -> list:
    """Violations as (i, j, K) with K the sorted base set."""
    iv = M.interval
    return [
        (iv.lo + i, iv.lo + j, from_mask(iv, m))
        for i, j, m in edge_violations(M.array, iv.m + 1, limit)
    ]


def check_tropical_plucker(M: BZFinite, limit: int | None = None) -> list:
    iv = M.interval
    return [
        (iv.lo + i, iv.lo + j, iv.lo + k, from_mask(iv, m))
        for i, j, k, m in plucker_violations(M.array, iv.m + 1, limit)
    ]


def is_normalized(M: BZFinite, side: str = "e") -> bool:
    for i in M.interval:
        k = fundamental_maya(M.interval, i)
        if side == "w0":
            k = complement_finite(k)
        elif side != "e":
            raise ValueError(f"unknown side {side!r}")
        if M[k] != 0:
            return False
    return True


def is_bz(M: BZFinite, side: str = "e") -> bool:
    return is_normalized(M, side) and not edge_violations(M.array, M.interval.m + 1, 1) and not plucker_violations(
        M.array, M.interval.m + 1, 1
    )


def star(M: BZFinite) -> BZFinite:
    full = (1 << (M.interval.m + 1)) - 1
    return BZFinite(M.interval, [M.values[full ^ m] for m in range(full + 1)])


def _fund(M: BZFinite, i: int) -> int:
    """M at k(Lambda_i), with Lambda_{lo-1} and Lambda_{hi+1} read as 0."""
    if i < M.interval.lo or i > M.interval.hi:
        return 0
    return M[fundamental_maya(M.interval, i)]


def weight_bz(M: BZFinite, side: str = "w0") -> WeightVector:
    if side == "e":
        return weight_bz(star(M), "w0")
    return WeightVector.finite(M.interval, {i: _fund(M, i) for i in M.interval})


def epsilon_bz(M: BZFinite, i: int, side: str = "w0") -> int:
    if i not in M.interval:
        raise ValueError(f"index {i} outside {M.interval}")
    if side == "e":
        return epsilon_bz(star(M), i, "w0")
    sig = M[fundamental_maya(M.interval, i, "sigmaLambda")]
    return -(_fund(M, i) + sig - _fund(M, i - 1) - _fund(M, i + 1))


# -- crystal operators by transport ----------------------------------------

SIDE_OPS = {"e": ("e_star", "f_star"), "w0": ("e", "f")}


@dataclass(frozen=True)
class DressedBZ:
    """A BZ datum together with its Lusztig coordinates.

    side "e": bz == phi(coords); side "w0": bz == phi_prime(coords).
    """

    bz: BZFinite
    coords: LusztigFinite | None = None
    side: str = "e"

    @classmethod
    def from_lusztig(cls, a: LusztigFinite, side: str = "e") -> "DressedBZ":
        from .tableau_phi import phi, phi_prime

        return cls(phi(a) if side == "e" else phi_prime(a), a, side)

    def with_coords(self) -> "DressedBZ":
        if self.coords is not None:
            return self
        from .tableau_phi import phi_inverse

        return DressedBZ(self.bz, phi_inverse(self.bz, self.side), self.side)


def apply_bz(D: DressedBZ, i: int, op: str):
    from .tableau_phi import phi, phi_prime

    if op not in SIDE_OPS[D.side]:
        raise ValueError(f"operator {op!r} does not act on {D.side}-normalized data")
    D = D.with_coords()
    new = apply_lusztig(D.coords, i, op)
    if new is None:
        return None
    return DressedBZ(phi(new) if D.side == "e" else phi_prime(new), new, D.side)


def epsilon_dressed(D: DressedBZ, i: int) -> int:
    """epsilon* on the e side, epsilon on the w0 side, read from the coordinates."""
    D = D.with_coords()
    return epsilon_lusztig(D.coords, i, "star" if D.side == "e" else "ordinary")


def _target_and_region(interval: Interval, i: int, op: str):
    """Target diagram, its change, and the predicate of the region allowed to move."""
    fund = fundamental_maya(interval, i)
    if op in ("e", "f"):
        target = fund.members
        region = lambda ks: i in ks and i + 1 not in ks  # noqa: E731
    else:
        target = complement_finite(fund).members
        region = lambda ks: i not in ks and i + 1 in ks  # noqa: E731
    delta = 1 if op in ("e", "e_star") else -1
    return target, delta, region


def verify_characterization(M_old: BZFinite, M_new: BZFinite, i: int, op: str) -> bool:
    if M_old.interval != M_new.interval:
        return False
    target, delta, region = _target_and_region(M_old.interval, i, op)
    if M_new[target] != M_old[target] + delta:
        return False
    for k in all_maya_finite(M_old.interval):
        if not region(set(k.members)) and M_new[k] != M_old[k]:
            return False
    return True


def search_characterized(M: BZFinite, i: int, op: str, radius: int, side: str = "e") -> list[BZFinite]:
    """Every BZ datum meeting the characterization of ``op`` with free components
    within ``radius`` of their old values."""
    target, delta, region = _target_and_region(M.interval, i, op)
    free = [k.members for k in all_maya_finite(M.interval) if region(set(k.members)) and k.members != target]
    base = M.with_component(target, M[target] + delta)
    found = []
    for shifts in product(range(-radius, radius + 1), repeat=len(free)):
        cand = base
        for members, s in zip(free, shifts):
            if s:
                cand = cand.with_component(members, M[members] + s)
        if is_bz(cand, side):
            found.append(cand)
    return found
