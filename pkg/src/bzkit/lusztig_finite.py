"""Lusztig data for type A over a finite interval and their two crystal structures."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Mapping

import numpy as np

from .root_data import Interval, WeightVector

OPS = ("e", "f", "e_star", "f_star")


def positive_pairs(interval: Interval) -> list[tuple[int, int]]:
    ext = list(interval.ext)
    return [(i, j) for a, i in enumerate(ext) for j in ext[a + 1:]]


@dataclass(frozen=True, order=True)
class LusztigFinite:
    """Nonnegative integers a[i, j] for lo <= i < j <= hi+1.

    ``values`` lists the entries in the order of ``positive_pairs``.
    """

    interval: Interval
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        n = self.interval.m + 1
        if len(vals) != n * (n - 1) // 2:
            raise ValueError("wrong number of entries for the interval")
        if any(v < 0 for v in vals):
            raise ValueError("Lusztig data must be nonnegative")

    @classmethod
    def zero(cls, interval: Interval) -> "LusztigFinite":
        n = interval.m + 1
        return cls(interval, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_entries(cls, interval: Interval, entries: Mapping[tuple[int, int], int]) -> "LusztigFinite":
        pairs = positive_pairs(interval)
        known = set(pairs)
        for key in entries:
            if tuple(key) not in known:
                raise ValueError(f"index {key} outside the positive roots of {interval}")
        return cls(interval, tuple(entries.get(p, 0) for p in pairs))

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense (m+1)x(m+1) array with a[i, j] at [i-lo, j-lo]."""
        n = self.interval.m + 1
        mat = np.zeros((n, n), dtype=np.int64)
        lo = self.interval.lo
        for (i, j), v in zip(positive_pairs(self.interval), self.values):
            mat[i - lo, j - lo] = v
        mat.setflags(write=False)
        return mat

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        ext = self.interval.ext
        if i < ext.start or j >= ext.stop or i >= j:
            return 0
        return int(self.matrix[i - ext.start, j - ext.start])

    def entries(self) -> dict[tuple[int, int], int]:
        return {p: v for p, v in zip(positive_pairs(self.interval), self.values) if v}

    def updated(self, deltas: Mapping[tuple[int, int], int]) -> "LusztigFinite":
        acc = dict(zip(positive_pairs(self.interval), self.values))
        for key, d in deltas.items():
            if key in acc:
                acc[key] += d
        return LusztigFinite(self.interval, tuple(acc.values()))

    def to_json(self) -> dict:
        return {
            "lo": self.interval.lo,
            "hi": self.interval.hi,
            "entries": [{"i": i, "j": j, "a": v} for (i, j), v in self.entries().items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LusztigFinite":
        interval = Interval(int(obj["lo"]), int(obj["hi"]))
        entries = {}
        for e in obj.get("entries", []):
            key = (int(e["i"]), int(e["j"]))
            if key in entries:
                raise ValueError(f"duplicate entry {key}")
            entries[key] = int(e["a"])
        return cls.from_entries(interval, entries)

    def __str__(self):
        body = " ".join(f"a{i},{j}={v}" for (i, j), v in self.entries().items())
        return f"I={self.interval.lo}..{self.interval.hi};{body or '0'}"


def r_values(a: LusztigFinite) -> dict[int, int]:
    """r_i = sum of a[s, t] over s <= i < t."""
    mat = a.matrix
    lo = a.interval.lo
    return {i: int(mat[: i - lo + 1, i - lo + 1:].sum()) for i in a.interval.ext[:-1]}


def weight(a: LusztigFinite) -> WeightVector:
    return WeightVector.finite(a.interval, {i: -r for i, r in r_values(a).items()})


def _check_index(a: LusztigFinite, i: int):
    if i not in a.interval:
        raise ValueError(f"index {i} outside {a.interval}")


def partial_sums(a: LusztigFinite, i: int, kind: str = "ordinary") -> dict[int, int]:
    _check_index(a, i)
    lo, top = a.interval.lo, a.interval.hi + 1
    out = {}
    acc = 0
    if kind == "ordinary":
        for k in range(lo, i + 1):
            acc += a[k, i + 1] - a[k - 1, i]
            out[k] = acc
    elif kind == "star":
        for k in range(top - 1, i - 1, -1):
            acc += a[i, k + 1] - a[i + 1, k + 2]
            out[k] = acc
        out = dict(sorted(out.items()))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return out


def epsilon(a: LusztigFinite, i: int, kind: str = "ordinary") -> int:
    return max(partial_sums(a, i, kind).values())


def argpoints(a: LusztigFinite, i: int, kind: str = "ordinary") -> tuple:
    """(k_e, k_f); k_e is None when epsilon vanishes."""
    sums = partial_sums(a, i, kind)
    eps = max(sums.values())
    arg = [k for k, v in sums.items() if v == eps]
    if kind == "ordinary":
        ke, kf = arg[0], arg[-1]
    else:
        ke, kf = arg[-1], arg[0]
    return (ke if eps > 0 else None), kf


def apply(a: LusztigFinite, i: int, op: str):
    """Kashiwara operator ``op`` at i; returns None for the bottom element.

    Updates landing on a diagonal index (i, i) are dropped.
    """
    if op not in OPS:
        raise ValueError(f"unknown operator {op!r}")
    kind = "star" if op.endswith("_star") else "ordinary"
    ke, kf = argpoints(a, i, kind)
    if op == "e":
        if ke is None:
            return None
        deltas = {(ke, i): 1, (ke, i + 1): -1}
    elif op == "f":
        deltas = {(kf, i): -1, (kf, i + 1): 1}
    elif op == "e_star":
        if ke is None:
            return None
        deltas = {(i, ke + 1): -1, (i + 1, ke + 1): 1}
    else:
        deltas = {(i, kf + 1): 1, (i + 1, kf + 1): -1}
    return a.updated({(s, t): d for (s, t), d in deltas.items() if s < t})


def data_of_weight(interval: Interval, r: Mapping[int, int]) -> list[LusztigFinite]:
    """All Lusztig data with the given r_i (Kostant partitions), by direct search."""
    pairs = positive_pairs(interval)
    target = [int(r.get(i, 0)) for i in interval.ext[:-1]]
    lo = interval.lo
    out = []
    # assign multiplicities pair by pair; each pair (s, t) covers r_s .. r_{t-1}
    def rec(idx, remaining, vals):
        if idx == len(pairs):
            if not any(remaining):
                out.append(LusztigFinite(interval, tuple(vals)))
            return
        s, t = pairs[idx]
        if any(remaining[: s - lo]):
            return
        cap = min(remaining[s - lo: t - lo])
        for v in range(cap + 1):
            for x in range(s - lo, t - lo):
                remaining[x] -= v
            vals.append(v)
            rec(idx + 1, remaining, vals)
            vals.pop()
            for x in range(s - lo, t - lo):
                remaining[x] += v

    rec(0, list(target), [])
    return out


def data_of_depth(interval: Interval, depth: int) -> list[LusztigFinite]:
    """All data whose weight has height exactly ``depth``."""
    out = []
    idx = list(interval.ext[:-1])
    for r in product(range(depth + 1), repeat=len(idx)):
        if sum(r) == depth:
            out.extend(data_of_weight(interval, dict(zip(idx, r))))
    return out


def random_datum(rng, interval: Interval, max_entry: int) -> LusztigFinite:
    n = interval.m + 1
    return LusztigFinite(interval, tuple(int(x) for x in rng.integers(0, max_entry + 1, n * (n - 1) // 2)))
