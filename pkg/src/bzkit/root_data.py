"""Intervals, weights in root coordinates and Cartan pairings (type A and affine A)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True, order=True)
class Interval:
    """The interval [lo, hi] of simple-root indices; hi >= lo."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def m(self) -> int:
        return self.hi - self.lo + 1

    @property
    def ext(self) -> range:
        """Extended index set [lo, hi+1]."""
        return range(self.lo, self.hi + 2)

    def __contains__(self, i) -> bool:
        return self.lo <= i <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def widen(self, left: int, right: int | None = None) -> "Interval":
        right = left if right is None else right
        return Interval(self.lo - left, self.hi + right)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


def _clean(coeffs: Mapping[int, int]) -> tuple:
    return tuple(sorted((int(k), int(v)) for k, v in coeffs.items() if v != 0))


@dataclass(frozen=True)
class WeightVector:
    """Integer combination of simple roots.

    ``interval`` is set for the finite kind, ``l`` for the affine kind.
    Coefficients are stored sparsely as sorted (index, value) pairs.
    """

    interval: Interval | None
    l: int | None
    items: tuple

    @classmethod
    def finite(cls, interval: Interval, coeffs: Mapping[int, int] | None = None) -> "WeightVector":
        coeffs = dict(coeffs or {})
        for i in coeffs:
            if i not in interval:
                raise ValueError(f"root index {i} outside {interval}")
        return cls(interval, None, _clean(coeffs))

    @classmethod
    def affine(cls, l: int, coeffs: Mapping[int, int] | None = None) -> "WeightVector":
        if l < 3:
            raise ValueError("affine rank needs l >= 3")
        acc: dict[int, int] = {}
        for i, v in (coeffs or {}).items():
            acc[i % l] = acc.get(i % l, 0) + v
        return cls(None, l, _clean(acc))

    @classmethod
    def delta(cls, l: int, mult: int = 1) -> "WeightVector":
        return cls.affine(l, {p: mult for p in range(l)})

    @property
    def kind(self) -> str:
        return "finite" if self.interval is not None else "affine"

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.items)

    def __getitem__(self, i: int) -> int:
        if self.l is not None:
            i %= self.l
        return self.coeffs.get(i, 0)

    def _same_space(self, other: "WeightVector"):
        if (self.interval, self.l) != (other.interval, other.l):
            raise ValueError("weights live in different root lattices")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._same_space(other)
        acc = self.coeffs
        for i, v in other.items:
            acc[i] = acc.get(i, 0) + v
        return WeightVector(self.interval, self.l, _clean(acc))

    def __neg__(self) -> "WeightVector":
        return WeightVector(self.interval, self.l, tuple((i, -v) for i, v in self.items))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + (-other)

    def scale(self, c: int) -> "WeightVector":
        return WeightVector(self.interval, self.l, _clean({i: c * v for i, v in self.items}))

    def height(self) -> int:
        return sum(v for _, v in self.items)

    def indices(self) -> range:
        return self.interval.ext[:-1] if self.interval is not None else range(self.l)

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.interval is not None:
            out.update(lo=self.interval.lo, hi=self.interval.hi)
        else:
            out["l"] = self.l
        out["coeffs"] = {str(i): v for i, v in self.items}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "WeightVector":
        coeffs = {int(k): int(v) for k, v in obj.get("coeffs", {}).items()}
        if obj["kind"] == "finite":
            return cls.finite(Interval(int(obj["lo"]), int(obj["hi"])), coeffs)
        if obj["kind"] == "affine":
            return cls.affine(int(obj["l"]), coeffs)
        raise ValueError(f"unknown weight kind {obj['kind']!r}")

    def __str__(self):
        if not self.items:
            return "0"
        sym = "a" if self.l is None else "ah"
        return " + ".join(f"{v}*{sym}{i}" for i, v in self.items)


def cartan_entry(i: int, j: int, l: int | None = None) -> int:
    """<h_i, alpha_j> for type A (l None) or affine type A_{l-1}^(1)."""
    if l is None:
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0
    i, j = i % l, j % l
    if i == j:
        return 2
    return -1 if abs(i - j) in (1, l - 1) else 0


def cartan_pairing(i: int, w: WeightVector) -> int:
    if w.interval is not None:
        if i not in w.interval:
            raise ValueError(f"root index {i} outside {w.interval}")
        return sum(v * cartan_entry(i, j) for j, v in w.items)
    return sum(v * cartan_entry(i, j, w.l) for j, v in w.items)


def phi_from_epsilon(eps: int, i: int, w: WeightVector) -> int:
    if eps < 0:
        raise ValueError("epsilon must be nonnegative")
    return eps + cartan_pairing(i, w)


def simple_root(i: int, interval: Interval | None = None, l: int | None = None) -> WeightVector:
    if interval is not None:
        return WeightVector.finite(interval, {i: 1})
    return WeightVector.affine(l, {i: 1})
