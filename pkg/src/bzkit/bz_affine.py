"""Sigma-fixed e-BZ data over Z, realized from a periodic Lusztig generator.

Every component is evaluated as a finite tropical minimization on a window
that is wide enough for the value to have stabilized.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import islice

import numpy as np

from . import lusztig_affine as la
from . import lusztig_finite as lf
from .bz_finite import edge_violations, from_mask, plucker_violations
from .lusztig_affine import LusztigAffine
from .maya import (
    HOLE,
    PARTICLE,
    MayaCharged,
    MayaFinite,
    as_particle,
    complement_charged,
    maya_window,
    min_window,
    omega,
    res_interval,
    res_inverse,
    tau_shift,
)
from .root_data import Interval, WeightVector
from .tableau_phi import phi_component, phi_prime_component

DEFAULT_FINGERPRINT_WINDOW = (2, 6)


def stable_interval(k: MayaCharged, N: int) -> Interval:
    return min_window(k).widen(N, 0)


def _require_side(k: MayaCharged, side: str):
    if k.side != side:
        raise ValueError(f"expected a {side}-side diagram, got {k}")


def component_at(gen: LusztigAffine, k: MayaCharged, interval: Interval | None = None) -> int:
    """M_k(gen) computed on ``interval`` (default: the stable interval of k)."""
    _require_side(k, PARTICLE)
    if interval is None:
        interval = stable_interval(k, gen.width)
    return phi_component(la.window(gen, interval), res_interval(k, interval))


def theta_interval(k: MayaCharged, l: int, N: int) -> Interval:
    return Interval(k.floor - (2 * l + 1) * N + 1, k.top + N - 1)


def pending(k: MayaCharged, p: int, l: int) -> list[int]:
    """L(k^c, p): positions q = p mod l with q outside k and q+1 inside."""
    lo, hi = k.floor, k.top
    return [q for q in range(lo, hi + 1) if (q - p) % l == 0 and q not in k and q + 1 in k]


@dataclass
class BZAffineView:
    """Components of Phi_Z(generator), memoized by (charge mod l, shape)."""

    generator: LusztigAffine
    memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    @property
    def l(self) -> int:
        return self.generator.l

    @property
    def N(self) -> int:
        return self.generator.width

    def component(self, k: MayaCharged) -> int:
        _require_side(k, PARTICLE)
        key = (k.charge % self.l, k.shape)
        val = self.memo.get(key)
        if val is None:
            val = component_at(self.generator, k)
            with self._lock:
                self.memo.setdefault(key, val)
        return val

    def theta_component(self, k: MayaCharged, pad: tuple[int, int] = (0, 0)) -> int:
        _require_side(k, PARTICLE)
        interval = theta_interval(k, self.l, self.N).widen(*pad)
        return self.component(omega(k, interval))

    def star_component(self, k: MayaCharged) -> int:
        _require_side(k, HOLE)
        return self.component(complement_charged(k))

    def phi_prime_component(self, k: MayaCharged, interval: Interval | None = None) -> int:
        """Component of the dual map at a hole-side diagram."""
        _require_side(k, HOLE)
        if interval is None:
            interval = min_window(k).widen(0, self.N)
        return phi_prime_component(la.window(self.generator, interval), res_interval(k, interval))

    def fingerprint(self, window=DEFAULT_FINGERPRINT_WINDOW) -> tuple:
        return tuple(self.component(k) for k in maya_window(*window))


def weight_bz_affine(view: BZAffineView) -> WeightVector:
    return WeightVector.affine(view.l, {p: view.theta_component(MayaCharged(p)) for p in range(view.l)})


def epsilon_hat_star_bz(view: BZAffineView, p: int) -> int:
    p %= view.l
    th = view.theta_component
    return -(
        th(MayaCharged(p)) + th(MayaCharged(p, (1,))) - th(MayaCharged(p + 1)) - th(MayaCharged(p - 1))
    )


def apply_hat_bz(view: BZAffineView, p: int, op: str):
    if op not in ("e_star", "f_star"):
        raise ValueError("only the starred operators act on e-normalized data")
    if op == "e_star" and epsilon_hat_star_bz(view, p) == 0:
        return None
    new = la.apply_hat(view.generator, p, op)
    if new is None:
        raise ArithmeticError("BZ-side and Lusztig-side epsilon disagree")
    return BZAffineView(new)


def windowed_operator_component(view: BZAffineView, k: MayaCharged, p: int, op: str):
    """(op_p M)_k via finite operators at q in L(k^c, p) on a wide window only."""
    gen = view.generator
    l = view.l
    interval = stable_interval(k, gen.width + 1).widen((gen.width + 3) * l)
    b = la.window(gen, interval)
    for q in pending(k, p % l, l):
        b = lf.apply(b, q, op)
        if b is None:
            return None
    return phi_component(b, res_interval(k, interval))


def sigma_invariance_check(view: BZAffineView, sample) -> bool:
    return all(component_at(view.generator, k) == component_at(view.generator, tau_shift(k, view.l)) for k in sample)


def window_array(view: BZAffineView, W: Interval, side: str = PARTICLE) -> np.ndarray:
    """Components over M_Z(W) (or the hole-side analogue) indexed by bitmask on W~."""
    n = W.m + 1
    full = (1 << n) - 1
    arr = np.zeros(1 << n, dtype=np.int64)
    for mask in range(1, full):
        k = res_inverse(MayaFinite(W, from_mask(W, mask)), side)
        arr[mask] = view.component(k) if side == PARTICLE else view.phi_prime_component(k)
    return arr


@dataclass
class ValidationReport:
    window: Interval
    intervals_checked: int = 0
    edge: list = field(default_factory=list)
    plucker: list = field(default_factory=list)
    normalization: list = field(default_factory=list)
    stabilization: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.edge or self.plucker or self.normalization or self.stabilization)

    def summary(self) -> dict:
        return {
            "window": [self.window.lo, self.window.hi],
            "intervals_checked": self.intervals_checked,
            "edge": len(self.edge),
            "plucker": len(self.plucker),
            "normalization": len(self.normalization),
            "stabilization": len(self.stabilization),
            "ok": self.ok,
        }


def _sub_array(arr: np.ndarray, W: Interval, K: Interval) -> np.ndarray:
    """Restrict a W-level array to the diagrams of M_Z(K)."""
    off = K.lo - W.lo
    prefix = (1 << off) - 1
    nK = K.m + 1
    idx = prefix | (np.arange(1 << nK) << off)
    return arr[idx]


def validate_e_bz(
    view: BZAffineView,
    W: Interval,
    cap: int | None = None,
    stab_samples: int = 20,
    limit: int = 10,
    side: str = PARTICLE,
) -> ValidationReport:
    """Check the BZ conditions on every sub-interval K of W with |K~| <= cap,
    normalization at ground states, and stabilization of reflected components.

    ``side`` HOLE validates the dual (w0-normalized) components instead.
    """
    rep = ValidationReport(W)
    arr = window_array(view, W, side)
    cap = W.m + 1 if cap is None else cap
    for lo in range(W.lo, W.hi + 1):
        for hi in range(lo, W.hi + 1):
            K = Interval(lo, hi)
            if K.m + 1 > cap:
                continue
            sub = _sub_array(arr, W, K) if side == PARTICLE else _sub_array_hole(arr, W, K)
            for i, j, m in edge_violations(sub, K.m + 1, limit):
                rep.edge.append((str(K), K.lo + i, K.lo + j, from_mask(K, m)))
            for i, j, k, m in plucker_violations(sub, K.m + 1, limit):
                rep.plucker.append((str(K), K.lo + i, K.lo + j, K.lo + k, from_mask(K, m)))
            rep.intervals_checked += 1
    for r in range(W.lo - 1, W.hi + 2):
        if side == PARTICLE:
            val = component_at(view.generator, MayaCharged(r))
        else:
            val = view.phi_prime_component(MayaCharged(r, (), HOLE))
        if val != 0:
            rep.normalization.append((r, val))
    if side == PARTICLE and stab_samples:
        n = W.m + 1
        full = (1 << n) - 1
        step = max(1, (full - 1) // stab_samples)
        for mask in islice(range(1, full, step), stab_samples):
            k = res_inverse(MayaFinite(W, from_mask(W, mask)))
            base = view.theta_component(k)
            for pad in ((1, 0), (0, 1), (view.l, view.l)):
                if view.theta_component(k, pad) != base:
                    rep.stabilization.append((str(k), pad))
    return rep


def _sub_array_hole(arr: np.ndarray, W: Interval, K: Interval) -> np.ndarray:
    """Hole-side restriction: positions of W~ above K~ are holes (bits set)."""
    off = K.lo - W.lo
    nK = K.m + 1
    nW = W.m + 1
    suffix = ((1 << nW) - 1) ^ ((1 << (off + nK)) - 1)
    idx = suffix | (np.arange(1 << nK) << off)
    return arr[idx]


def statistics_match_generator(view: BZAffineView) -> bool:
    """Weight and starred epsilon agree with the generator's Lusztig-side values."""
    gen = view.generator
    if weight_bz_affine(view) != la.weight_affine(gen):
        return False
    return all(epsilon_hat_star_bz(view, p) == la.epsilon_hat(gen, p, "star") for p in range(view.l))
