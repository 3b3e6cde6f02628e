"""Periodic Lusztig data of affine type A_{l-1}^(1), i.e. multisegments mod l."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import lusztig_finite as lf
from .lusztig_finite import LusztigFinite
from .root_data import Interval, WeightVector

OPS = lf.OPS


@dataclass(frozen=True, order=True)
class LusztigAffine:
    """``table[res][d - 1]`` is a[i, i + d] for i = res mod l.

    Trailing all-zero length classes are trimmed, so ``width`` (N) is minimal:
    a[i, j] = 0 whenever j - i >= N.
    """

    l: int
    table: tuple

    def __post_init__(self):
        if self.l < 3:
            raise ValueError("l must be at least 3")
        if len(self.table) != self.l:
            raise ValueError("table needs one row per residue")
        rows = [list(int(x) for x in row) for row in self.table]
        if any(x < 0 for row in rows for x in row):
            raise ValueError("multiplicities must be nonnegative")
        length = max(len(r) for r in rows)
        rows = [r + [0] * (length - len(r)) for r in rows]
        while length and not any(r[length - 1] for r in rows):
            length -= 1
        object.__setattr__(self, "table", tuple(tuple(r[:length]) for r in rows))

    @classmethod
    def zero(cls, l: int) -> "LusztigAffine":
        return cls(l, ((),) * l)

    @classmethod
    def from_cells(cls, l: int, cells: Mapping[tuple[int, int], int]) -> "LusztigAffine":
        """Build from {(residue, length): multiplicity}."""
        length = max((d for (_, d), v in cells.items() if v), default=0)
        rows = [[0] * length for _ in range(l)]
        for (res, d), v in cells.items():
            if d < 1:
                raise ValueError("segment lengths are positive")
            if v:
                rows[res % l][d - 1] += v
        return cls(l, tuple(tuple(r) for r in rows))

    @property
    def width(self) -> int:
        return len(self.table[0]) + 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        d = j - i
        if d < 1 or d >= self.width:
            return 0
        return self.table[i % self.l][d - 1]

    def cells(self) -> dict[tuple[int, int], int]:
        return {
            (res, d + 1): v for res, row in enumerate(self.table) for d, v in enumerate(row) if v
        }

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "entries": [{"res": r, "len": d, "mult": v} for (r, d), v in sorted(self.cells().items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LusztigAffine":
        l = int(obj["l"])
        cells: dict = {}
        for e in obj.get("entries", []):
            res, d = int(e["res"]), int(e["len"])
            if not 0 <= res < l:
                raise ValueError(f"residue {res} outside 0..{l - 1}")
            if (res, d) in cells:
                raise ValueError(f"duplicate cell {(res, d)}")
            cells[(res, d)] = int(e["mult"])
        return cls.from_cells(l, cells)

    def __str__(self):
        return to_segment_text(self) or "0"


def is_aperiodic(a: LusztigAffine) -> bool:
    return all(min(row[d] for row in a.table) == 0 for d in range(a.width - 1))


def to_multisegments(a: LusztigAffine) -> dict[tuple[int, int], int]:
    """Multiset of segments (start residue, length) with multiplicities."""
    return a.cells()


def from_multisegments(ms: Mapping[tuple[int, int], int] | Iterable[tuple[int, int]], l: int) -> LusztigAffine:
    if not isinstance(ms, Mapping):
        acc: dict = {}
        for res, d in ms:
            acc[(res % l, d)] = acc.get((res % l, d), 0) + 1
        ms = acc
    return LusztigAffine.from_cells(l, ms)


def to_segment_text(a: LusztigAffine) -> str:
    parts = []
    for (res, d), v in sorted(a.cells().items()):
        parts.append(f"({res};{d})" + (f"^{v}" if v > 1 else ""))
    return " ".join(parts)


_SEGMENT = re.compile(r"\((-?\d+);(\d+)\)(?:\^(\d+))?")


def parse_segment_text(text: str, l: int) -> LusztigAffine:
    text = text.strip()
    if text == "0":
        return LusztigAffine.zero(l)
    cells: dict = {}
    pos = 0
    for m in _SEGMENT.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse segment text near {text[pos:m.start()]!r}")
        key = (int(m.group(1)) % l, int(m.group(2)))
        cells[key] = cells.get(key, 0) + int(m.group(3) or 1)
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"cannot parse segment text near {text[pos:]!r}")
    return LusztigAffine.from_cells(l, cells)


def r_value(a: LusztigAffine, p: int) -> int:
    """Number of segments (with multiplicity) covering the edge p -> p+1."""
    total = 0
    for (res, d), v in a.cells().items():
        # starts s = res mod l with p - d + 1 <= s <= p
        lo = p - d + 1
        first = lo + ((res - lo) % a.l)
        if first <= p:
            total += v * ((p - first) // a.l + 1)
    return total


def weight_affine(a: LusztigAffine) -> WeightVector:
    return WeightVector.affine(a.l, {p: -r_value(a, p) for p in range(a.l)})


def window(a: LusztigAffine, interval: Interval) -> LusztigFinite:
    return LusztigFinite(interval, tuple(a[i, j] for i, j in lf.positive_pairs(interval)))


def op_window(a: LusztigAffine, p: int) -> Interval:
    """Window [p - (N+1)l, p + (N+1)l] used for every operator computation."""
    pad = (a.width + 1) * a.l
    return Interval(p - pad, p + pad)


def epsilon_hat(a: LusztigAffine, p: int, kind: str = "ordinary") -> int:
    p %= a.l
    return lf.epsilon(window(a, op_window(a, p)), p, kind)


def apply_hat(a: LusztigAffine, p: int, op: str):
    """Product over r of the operator at p + rl, as one update per cell class."""
    if op not in OPS:
        raise ValueError(f"unknown operator {op!r}")
    p %= a.l
    kind = "star" if op.endswith("_star") else "ordinary"
    ke, kf = lf.argpoints(window(a, op_window(a, p)), p, kind)
    if op in ("e", "e_star") and ke is None:
        return None
    if op == "e":
        deltas = {(ke, p): 1, (ke, p + 1): -1}
    elif op == "f":
        deltas = {(kf, p): -1, (kf, p + 1): 1}
    elif op == "e_star":
        deltas = {(p, ke + 1): -1, (p + 1, ke + 1): 1}
    else:
        deltas = {(p, kf + 1): 1, (p + 1, kf + 1): -1}
    cells = dict(a.cells())
    for (s, t), d in deltas.items():
        if s < t:
            key = (s % a.l, t - s)
            cells[key] = cells.get(key, 0) + d
    return LusztigAffine.from_cells(a.l, cells)


def z_of(a: LusztigAffine) -> tuple:
    """z_n = minimum multiplicity in the length-n class; trailing zeros trimmed."""
    z = [min(row[d] for row in a.table) for d in range(a.width - 1)]
    while z and z[-1] == 0:
        z.pop()
    return tuple(z)


def a_z_of(z: Sequence[int], l: int) -> LusztigAffine:
    return LusztigAffine(l, tuple(tuple(z) for _ in range(l)))


def m_of(z: Sequence[int]) -> int:
    return sum(n * zn for n, zn in enumerate(z, 1))


def strip_z(a: LusztigAffine) -> tuple[LusztigAffine, tuple]:
    z = z_of(a)
    rows = tuple(
        tuple(x - (z[d] if d < len(z) else 0) for d, x in enumerate(row)) for row in a.table
    )
    return LusztigAffine(a.l, rows), z


def add(a: LusztigAffine, b: LusztigAffine) -> LusztigAffine:
    if a.l != b.l:
        raise ValueError("different l")
    cells = dict(a.cells())
    for key, v in b.cells().items():
        cells[key] = cells.get(key, 0) + v
    return LusztigAffine.from_cells(a.l, cells)


def is_maximal(a: LusztigAffine) -> bool:
    return all(epsilon_hat(a, p) == 0 for p in range(a.l))


def tensor_T_view(a: LusztigAffine) -> tuple[LusztigAffine, WeightVector]:
    a0, z = strip_z(a)
    return a0, WeightVector.delta(a.l, -m_of(z))


def data_of_height(l: int, height: int, aperiodic_only: bool = False) -> list[LusztigAffine]:
    """All periodic data whose weight has height ``height`` (sum of segment lengths)."""
    kinds = [(res, d) for d in range(1, height + 1) for res in range(l)]
    out = []

    def rec(idx, left, cells):
        if left == 0:
            a = LusztigAffine.from_cells(l, cells)
            if not aperiodic_only or is_aperiodic(a):
                out.append(a)
            return
        if idx == len(kinds):
            return
        res, d = kinds[idx]
        for mult in range(left // d + 1):
            if mult:
                cells[(res, d)] = mult
            rec(idx + 1, left - mult * d, cells)
            cells.pop((res, d), None)

    rec(0, height, {})
    return out


def random_aperiodic(rng, l: int, max_width: int, max_entry: int) -> LusztigAffine:
    """Uniform table entries, then one random zero forced into every length class."""
    length = max_width - 1
    rows = [[int(x) for x in rng.integers(0, max_entry + 1, length)] for _ in range(l)]
    for d in range(length):
        rows[int(rng.integers(0, l))][d] = 0
    return LusztigAffine(l, tuple(tuple(r) for r in rows))


def random_periodic(rng, l: int, max_width: int, max_entry: int) -> LusztigAffine:
    length = max_width - 1
    return LusztigAffine(l, tuple(tuple(int(x) for x in rng.integers(0, max_entry + 1, length)) for _ in range(l)))
