"""Maya diagrams on a finite interval and charged Maya diagrams on Z.

A charged diagram is stored canonically as (charge, partition, side).  The
particle side is the set k = {k_j : j <= r} with k_j = j + shape[r - j] (zero
beyond the partition), so that k agrees with Z_{<=r} far to the left.  The
hole side is the complement Z \\ k of the particle diagram with the same
(charge, shape).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .root_data import Interval

PARTICLE = "particle"
HOLE = "hole"


@dataclass(frozen=True, order=True)
class MayaFinite:
    """Nonempty proper subset of the extended interval [lo, hi+1]."""

    interval: Interval
    members: tuple

    def __post_init__(self):
        mem = tuple(sorted(set(int(x) for x in self.members)))
        object.__setattr__(self, "members", mem)
        ext = self.interval.ext
        if not mem or len(mem) == len(ext):
            raise ValueError("a Maya diagram must be a nonempty proper subset")
        if mem[0] < ext.start or mem[-1] >= ext.stop:
            raise ValueError(f"members {mem} leave {list(ext)}")

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self):
        return len(self.members)

    def to_json(self) -> dict:
        return {"lo": self.interval.lo, "hi": self.interval.hi, "members": list(self.members)}

    @classmethod
    def from_json(cls, obj: dict) -> "MayaFinite":
        return cls(Interval(int(obj["lo"]), int(obj["hi"])), tuple(int(x) for x in obj["members"]))

    def __str__(self):
        return f"I={self.interval.lo}..{self.interval.hi};{{{','.join(map(str, self.members))}}}"


def all_maya_finite(interval: Interval) -> list[MayaFinite]:
    """Every element of M_I^x, ordered by size then lexicographically."""
    from itertools import combinations

    ext = list(interval.ext)
    return [
        MayaFinite(interval, c) for size in range(1, len(ext)) for c in combinations(ext, size)
    ]


def complement_finite(k: MayaFinite) -> MayaFinite:
    return MayaFinite(k.interval, tuple(x for x in k.interval.ext if x not in k.members))


def fundamental_maya(interval: Interval, i: int, variant: str = "Lambda") -> MayaFinite:
    """k(Lambda_i) = [lo, i] or k(sigma_i Lambda_i) = [lo, i-1] + {i+1}."""
    if i not in interval:
        raise ValueError(f"index {i} outside {interval}")
    if variant == "Lambda":
        return MayaFinite(interval, tuple(range(interval.lo, i + 1)))
    if variant == "sigmaLambda":
        return MayaFinite(interval, tuple(range(interval.lo, i)) + (i + 1,))
    raise ValueError(f"unknown variant {variant!r}")


def _partition(parts: Iterable[int]) -> tuple:
    shape = tuple(int(x) for x in parts)
    if any(x <= 0 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"not a partition: {shape}")
    return shape


@dataclass(frozen=True, order=True)
class MayaCharged:
    charge: int
    shape: tuple = ()
    side: str = PARTICLE

    def __post_init__(self):
        object.__setattr__(self, "shape", _partition(self.shape))
        if self.side not in (PARTICLE, HOLE):
            raise ValueError(f"side must be particle or hole, not {self.side!r}")

    # particle positions k_j, j <= r
    @property
    def floor(self) -> int:
        """Every x <= floor lies in the particle diagram."""
        return self.charge - len(self.shape)

    @property
    def top(self) -> int:
        """Largest particle position k_r."""
        return self.charge + (self.shape[0] if self.shape else 0)

    def particles(self) -> tuple:
        """Deviating particle positions k_r > k_{r-1} > ... (those above floor)."""
        r = self.charge
        return tuple(r - i + lam for i, lam in enumerate(self.shape))

    def _in_particle(self, x: int) -> bool:
        return x <= self.floor or x in self.particles()

    def __contains__(self, x) -> bool:
        inside = self._in_particle(x)
        return inside if self.side == PARTICLE else not inside

    def members_in(self, lo: int, hi: int) -> list[int]:
        return [x for x in range(lo, hi + 1) if x in self]

    @property
    def is_ground(self) -> bool:
        return not self.shape

    def size(self) -> int:
        return sum(self.shape)

    def to_json(self) -> dict:
        return {"charge": self.charge, "shape": list(self.shape), "side": self.side}

    @classmethod
    def from_json(cls, obj: dict) -> "MayaCharged":
        return cls(int(obj["charge"]), tuple(obj.get("shape", ())), obj.get("side", PARTICLE))

    def __str__(self):
        tag = "" if self.side == PARTICLE else ";hole"
        return f"r={self.charge};lambda={','.join(map(str, self.shape))}{tag}"


def from_particle_set(lo: int, members: Iterable[int], side: str = PARTICLE) -> MayaCharged:
    """Particle diagram Z_{<lo} + members (members >= lo), tagged with ``side``."""
    s = sorted(set(members), reverse=True)
    if s and s[-1] < lo:
        raise ValueError("members must lie at or above lo")
    r = lo - 1 + len(s)
    shape = [x - (r - i) for i, x in enumerate(s)]
    while shape and shape[-1] == 0:
        shape.pop()
    return MayaCharged(r, tuple(shape), side)


def _rebuild(k: MayaCharged, lo: int, hi: int, members: Iterable[int]) -> MayaCharged:
    """Rebuild a diagram of k's side from its members on [lo, hi]."""
    members = set(members)
    if k.side == PARTICLE:
        return from_particle_set(lo, members, PARTICLE)
    return from_particle_set(lo, set(range(lo, hi + 1)) - members, HOLE)


def _span(k: MayaCharged, *extra: int) -> tuple[int, int]:
    lo = min((k.floor, *extra))
    hi = max((k.top + 1, *extra))
    return lo, hi


def maya_from_young(r: int, shape: Sequence[int], side: str = PARTICLE) -> MayaCharged:
    return MayaCharged(r, tuple(shape), side)


def young_from_maya(k: MayaCharged) -> tuple:
    return k.shape


def complement_charged(k: MayaCharged) -> MayaCharged:
    return MayaCharged(k.charge, k.shape, HOLE if k.side == PARTICLE else PARTICLE)


def as_particle(k: MayaCharged) -> MayaCharged:
    return k if k.side == PARTICLE else complement_charged(k)


def sigma_transposition(k, i: int):
    """Swap the membership of i and i+1."""
    if isinstance(k, MayaFinite):
        if i not in k.interval:
            raise ValueError(f"transposition ({i},{i + 1}) leaves {list(k.interval.ext)}")
        swap = {i: i + 1, i + 1: i}
        return MayaFinite(k.interval, tuple(swap.get(x, x) for x in k.members))
    lo, hi = _span(k, i, i + 1)
    mem = set(k.members_in(lo, hi))
    a, b = i in mem, (i + 1) in mem
    mem.discard(i)
    mem.discard(i + 1)
    if a:
        mem.add(i + 1)
    if b:
        mem.add(i)
    return _rebuild(k, lo, hi, mem)


def tau_shift(k: MayaCharged, d: int = 1) -> MayaCharged:
    return MayaCharged(k.charge + d, k.shape, k.side)


def _require_particle(k: MayaCharged):
    if k.side != PARTICLE:
        raise ValueError("operation defined on particle-side diagrams only")


def l_quotient(k: MayaCharged, l: int) -> tuple:
    """Components k^j = {x : (x-1)l + j in k} for j = 1..l."""
    _require_particle(k)
    if l < 3:
        raise ValueError("l must be at least 3")
    lo, hi = _span(k)
    comps = []
    for j in range(1, l + 1):
        xlo = (lo - j) // l
        xhi = (hi - j) // l + 2
        mem = [x for x in range(xlo, xhi + 1) if (x - 1) * l + j in k]
        comps.append(from_particle_set(xlo, mem))
    return tuple(comps)


def from_l_quotient(comps: Sequence[MayaCharged], l: int) -> MayaCharged:
    if len(comps) != l:
        raise ValueError("need exactly l components")
    for c in comps:
        _require_particle(c)
    lo = min((c.floor - 1) * l + j for j, c in enumerate(comps, 1))
    hi = max(c.top * l + j for j, c in enumerate(comps, 1))
    mem = []
    for x in range(lo, hi + 1):
        q, j = divmod(x - 1, l)
        if q + 1 in comps[j]:
            mem.append(x)
    return from_particle_set(lo, mem)


def affine_weyl_act(k: MayaCharged, g, l: int) -> MayaCharged:
    """Action of sigma_hat_i (g an integer) or of pi (g == "pi") via l-quotients."""
    _require_particle(k)
    q = list(l_quotient(k, l))
    if g == "pi":
        new = [tau_shift(q[-1], 1)] + q[:-1]
    else:
        i = int(g) % l
        if i == 0:
            new = [tau_shift(q[-1], 1)] + q[1:-1] + [tau_shift(q[0], -1)]
        else:
            new = list(q)
            new[i - 1], new[i] = q[i], q[i - 1]
    return from_l_quotient(new, l)


def hook_lengths(shape: Sequence[int]) -> list[int]:
    shape = _partition(shape)
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    return [shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i])]


def is_l_core(k, l: int, method: str = "quotient") -> bool:
    """``k`` may be a MayaCharged or a bare partition."""
    if method == "hooks":
        shape = k.shape if isinstance(k, MayaCharged) else k
        return all(h % l for h in hook_lengths(shape))
    if not isinstance(k, MayaCharged):
        k = MayaCharged(0, tuple(k))
    return all(c.is_ground for c in l_quotient(as_particle(k), l))


def in_window(k: MayaCharged, interval: Interval) -> bool:
    """k lies in M_Z(I) (particle side) or M_Z^c(I) (hole side)."""
    p = as_particle(k)
    ext = interval.ext
    if p.floor < ext.start - 1 or p.top > ext.stop - 1:
        return False
    inside = p.members_in(ext.start, ext.stop - 1)
    return 0 < len(inside) < len(ext)


def _check_window(k: MayaCharged, interval: Interval):
    if not in_window(k, interval):
        raise ValueError(f"{k} does not restrict to {interval}")


def res_interval(k: MayaCharged, interval: Interval) -> MayaFinite:
    _check_window(k, interval)
    ext = interval.ext
    return MayaFinite(interval, tuple(k.members_in(ext.start, ext.stop - 1)))


def res_inverse(kI: MayaFinite, side: str = PARTICLE) -> MayaCharged:
    """Particle: Z_{<=n} + k_I.  Hole: k_I + Z_{>=n+m+2}."""
    ext = kI.interval.ext
    if side == PARTICLE:
        return from_particle_set(ext.start, kI.members)
    holes = set(ext) - set(kI.members)
    return from_particle_set(ext.start, holes, HOLE)


def omega(k: MayaCharged, interval: Interval) -> MayaCharged:
    """Reflect the restriction of k inside the extended interval."""
    return res_inverse(complement_finite(res_interval(k, interval)), k.side)


def min_window(k: MayaCharged) -> Interval:
    """Smallest I with k in M_Z(I); ground states get the convention [r, r]."""
    p = as_particle(k)
    if p.is_ground:
        return Interval(p.charge, p.charge)
    return Interval(p.floor + 1, p.top - 1)


def partitions(n: int, max_part: int | None = None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_upto(max_boxes: int):
    for n in range(max_boxes + 1):
        yield from partitions(n)


def maya_window(max_charge: int, max_boxes: int, side: str = PARTICLE) -> list[MayaCharged]:
    """All diagrams with |charge| <= max_charge and at most max_boxes boxes."""
    return [
        MayaCharged(r, lam, side)
        for r in range(-max_charge, max_charge + 1)
        for lam in partitions_upto(max_boxes)
    ]
