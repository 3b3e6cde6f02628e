"""Named verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteResult` holding per-check tallies
(passed, total), a few failure witnesses and optional tables.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import bz_affine as bza
from . import bz_finite as bzf
from . import lusztig_affine as la
from . import lusztig_finite as lf
from . import maya as my
from .graphs import affine_closure, finite_closure
from .root_data import Interval, WeightVector
from .tableau_phi import phi, phi_inverse, phi_prime


@dataclass
class RunConfig:
    seed: int = 42
    samples: int = 200
    depth: int = 3
    l: int = 3
    window: tuple = bza.DEFAULT_FINGERPRINT_WINDOW
    fingerprint: str = "components"
    generators: int = 20
    bz_window: tuple = (-6, 6)

    def __post_init__(self):
        if self.samples < 0 or self.depth < 0 or self.generators < 0:
            raise ValueError("bounds must be nonnegative")
        if self.l < 3:
            raise ValueError("l must be at least 3")
        if self.fingerprint not in ("components", "theta"):
            raise ValueError("fingerprint must be 'components' or 'theta'")


@dataclass
class SuiteResult:
    name: str
    anchor: str
    checks: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)

    def tally(self, check: str, ok: bool, witness=None):
        passed, total = self.checks.get(check, (0, 0))
        self.checks[check] = (passed + bool(ok), total + 1)
        if not ok and witness is not None and len(self.witnesses) < 20:
            self.witnesses.append({"check": check, "witness": str(witness)})

    def check_ok(self, check: str) -> bool:
        passed, total = self.checks.get(check, (0, 0))
        return passed == total

    @property
    def ok(self) -> bool:
        return all(p == t for p, t in self.checks.values())

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "anchor": self.anchor,
            "ok": self.ok,
            "checks": {k: {"passed": p, "total": t} for k, (p, t) in sorted(self.checks.items())},
            "witnesses": self.witnesses,
            "tables": self.tables,
        }


def random_partition(rng, max_boxes: int) -> tuple:
    n = int(rng.integers(0, max_boxes + 1))
    parts = list(my.partitions(n))
    return parts[int(rng.integers(0, len(parts)))]


def random_finite_samples(rng, count: int, ms=(2, 3, 4), max_entry: int = 4) -> list:
    out = []
    for _ in range(count):
        m = int(ms[int(rng.integers(0, len(ms)))])
        out.append(lf.random_datum(rng, Interval(1, m), max_entry))
    return out


# -- finite suites ----------------------------------------------------------

def suite_plucker(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("plucker", "e-BZ image of the tropical map")
    rng = np.random.default_rng(cfg.seed)
    for n, a in enumerate(random_finite_samples(rng, cfg.samples)):
        M = phi(a)
        edge = bzf.check_edge_inequalities(M, 1)
        pl = bzf.check_tropical_plucker(M, 1)
        res.tally("edge-inequalities", not edge, (n, str(a), edge[:1]))
        res.tally("tropical-plucker", not pl, (n, str(a), pl[:1]))
        res.tally("e-normalization", bzf.is_normalized(M, "e"), (n, str(a)))
    return res


def suite_phi_example(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("phi-example", "worked tropical example")
    I = Interval(1, 2)
    a = lf.LusztigFinite.from_entries(I, {(1, 2): 1, (1, 3): 0, (2, 3): 2})
    order = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
    expected = [0, -1, -2, 0, -1, -1]
    for method in ("cut", "bnb", "enumerate"):
        got = [phi(a, method)[k] for k in order]
        res.tally(f"components-{method}", got == expected, got)
    res.tables["components"] = {str(set(k)): v for k, v in zip(order, expected)}
    return res


def suite_crystal_iso(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("crystal-iso", "starred crystal isomorphism and characterization")
    rng = np.random.default_rng(cfg.seed)
    for a in random_finite_samples(rng, cfg.samples):
        D = bzf.DressedBZ.from_lusztig(a, "e")
        for i in a.interval:
            res.tally("epsilon-star", bzf.epsilon_bz(D.bz, i, "e") == lf.epsilon(a, i, "star"), (str(a), i))
            for op in ("e_star", "f_star"):
                new = bzf.apply_bz(D, i, op)
                if new is None:
                    res.tally("bottom-iff-epsilon-zero", lf.epsilon(a, i, "star") == 0, (str(a), i))
                    continue
                res.tally("characterization", bzf.verify_characterization(D.bz, new.bz, i, op), (str(a), i, op))
                back = bzf.apply_bz(new, i, "f_star" if op == "e_star" else "e_star")
                res.tally("inverse-pair", back is not None and back.bz == D.bz, (str(a), i, op))
    return res


def suite_uniqueness(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("uniqueness", "uniqueness of the starred BZ operators")
    I = Interval(1, 2)
    depth = cfg.depth
    radius = max(depth, 1)
    for d in range(depth + 1):
        for a in lf.data_of_depth(I, d):
            D = bzf.DressedBZ.from_lusztig(a, "e")
            for i in I:
                for op in ("e_star", "f_star"):
                    new = bzf.apply_bz(D, i, op)
                    found = bzf.search_characterized(D.bz, i, op, radius, "e")
                    if new is None:
                        res.tally("no-candidate-at-bottom", not found, (str(a), i, op, len(found)))
                    else:
                        res.tally("unique-candidate", found == [new.bz], (str(a), i, op, len(found)))
    return res


def suite_kostant(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("kostant", "connectivity of the starred crystal")
    I = Interval(1, 3)
    g = finite_closure(I, cfg.depth)
    counts = Counter(lf.weight(x) for x in g.nodes)
    expected = Counter()
    for d in range(cfg.depth + 1):
        for x in lf.data_of_depth(I, d):
            expected[lf.weight(x)] += 1
    for w in sorted(set(counts) | set(expected), key=str):
        res.tally("count-per-weight", counts[w] == expected[w], (str(w), counts[w], expected[w]))
    res.tables["counts"] = {str(w): expected[w] for w in sorted(expected, key=str)}
    return res


def suite_dual_map(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("dual-map", "w0-normalized dual tableau map")
    rng = np.random.default_rng(cfg.seed)
    for a in random_finite_samples(rng, cfg.samples):
        M = phi_prime(a)
        res.tally("bz-w0", bzf.is_bz(M, "w0"), str(a))
        res.tally("star-phi-w0", bzf.is_bz(bzf.star(phi(a)), "w0"), str(a))
        res.tally("weight", bzf.weight_bz(M, "w0") == lf.weight(a), str(a))
        D = bzf.DressedBZ(M, a, "w0")
        for i in a.interval:
            res.tally("epsilon", bzf.epsilon_bz(M, i, "w0") == lf.epsilon(a, i), (str(a), i))
            for op in ("e", "f"):
                new = bzf.apply_bz(D, i, op)
                if new is not None:
                    res.tally("characterization", bzf.verify_characterization(M, new.bz, i, op), (str(a), i, op))
    rng = np.random.default_rng(cfg.seed + 1)
    for n in range(min(cfg.generators, 10)):
        gen = la.random_aperiodic(rng, 3 + n % 2, 3, 2)
        rep = bza.validate_e_bz(bza.BZAffineView(gen), Interval(-4, 4), side=my.HOLE)
        res.tally("affine-window-w0", rep.ok, (str(gen), rep.summary()))
    return res


def suite_inverse(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("inverse", "bijectivity of the tropical map on small intervals")
    rng = np.random.default_rng(cfg.seed)
    for a in random_finite_samples(rng, cfg.samples, ms=(1, 2, 3), max_entry=3):
        res.tally("roundtrip-e", phi_inverse(phi(a), "e") == a, str(a))
        res.tally("roundtrip-w0", phi_inverse(phi_prime(a), "w0") == a, str(a))
    return res


# -- Maya suite ---------------------------------------------------------------

def orbit_of_ground(l: int, depth: int) -> dict:
    seen = {my.MayaCharged(0): 0}
    frontier = [my.MayaCharged(0)]
    for d in range(1, depth + 1):
        nxt = []
        for k in frontier:
            for i in range(l):
                y = my.affine_weyl_act(k, i, l)
                if y not in seen:
                    seen[y] = d
                    nxt.append(y)
        frontier = nxt
    return seen


def suite_maya(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("maya", "Maya diagrams, quotients and cores")
    shapes = list(my.partitions_upto(12))
    for r in range(-3, 4):
        for lam in shapes:
            k = my.maya_from_young(r, lam)
            res.tally("young-roundtrip", my.young_from_maya(k) == lam, (r, lam))
            rebuilt = my.from_particle_set(k.floor + 1, k.particles())
            res.tally("set-roundtrip", rebuilt == k, (r, lam))
    for l in (3, 4, 5):
        for lam in shapes:
            q = my.is_l_core(lam, l, "quotient")
            h = my.is_l_core(lam, l, "hooks")
            res.tally("core-quotient-vs-hooks", q == h, (l, lam))
    for l in (3, 4, 5):
        orbit = orbit_of_ground(l, 5)
        for k in orbit:
            res.tally("orbit-is-core", k.charge == 0 and my.is_l_core(k, l), (l, str(k)))
        for lam in my.partitions_upto(5):
            if my.is_l_core(lam, l, "hooks"):
                res.tally("small-cores-in-orbit", my.MayaCharged(0, lam) in orbit, (l, lam))
        res.tables[f"orbit-size-l{l}"] = len(orbit)
    return res


# -- affine suites ------------------------------------------------------------

def random_affine_generators(rng, count: int, ls=(3, 4), max_width: int = 4, max_entry: int = 2) -> list:
    out = []
    for n in range(count):
        l = ls[n % len(ls)]
        width = int(rng.integers(1, max_width + 1))
        out.append(la.random_aperiodic(rng, l, width, max_entry))
    return out


def suite_stabilization(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("stabilization", "stable intervals for components and reflections")
    rng = np.random.default_rng(cfg.seed)
    for gen in random_affine_generators(rng, cfg.generators):
        l = gen.l
        view = bza.BZAffineView(gen)
        for _ in range(cfg.samples):
            k = my.MayaCharged(int(rng.integers(-l, l + 1)), random_partition(rng, 8))
            I0 = bza.stable_interval(k, gen.width)
            base = bza.component_at(gen, k, I0)
            theta = view.theta_component(k)
            for d in range(1, 2 * l + 1):
                for pad in ((d, 0), (0, d), (d, d)):
                    res.tally("component", bza.component_at(gen, k, I0.widen(*pad)) == base, (str(gen), str(k), pad))
                    res.tally("reflection", view.theta_component(k, pad) == theta, (str(gen), str(k), pad))
    return res


def suite_maximal_collapse(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("maximal-collapse", "tropical map vanishes on maximal elements")
    window = my.maya_window(*cfg.window)
    for z in ((1,), (0, 1), (1, 1)):
        az = la.a_z_of(z, cfg.l)
        res.tally("maximal", la.is_maximal(az), z)
        view = bza.BZAffineView(az)
        for k in window:
            res.tally("component-zero", view.component(k) == 0, (z, str(k)))
    return res


def suite_e_bz(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("e-bz", "sigma-fixed e-BZ data from aperiodic generators")
    rng = np.random.default_rng(cfg.seed)
    W = Interval(*cfg.bz_window)
    sample = [my.MayaCharged(r, lam) for r in range(-3, 4) for lam in my.partitions_upto(5)]
    for gen in random_affine_generators(rng, cfg.generators):
        view = bza.BZAffineView(gen)
        rep = bza.validate_e_bz(view, W)
        res.tally("edge-inequalities", not rep.edge, (str(gen), rep.edge[:1]))
        res.tally("tropical-plucker", not rep.plucker, (str(gen), rep.plucker[:1]))
        res.tally("e-normalization", not rep.normalization, (str(gen), rep.normalization[:1]))
        res.tally("stabilization", not rep.stabilization, (str(gen), rep.stabilization[:1]))
        res.tally("sigma-invariance", bza.sigma_invariance_check(view, sample), str(gen))
    return res


def _fingerprint(view: bza.BZAffineView, window, mode: str) -> tuple:
    ks = my.maya_window(*window)
    fp = tuple(view.component(k) for k in ks)
    if mode == "theta":
        fp += tuple(view.theta_component(k) for k in ks)
    return fp


def suite_thm_main(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("thm-main", "aperiodic data realize the sigma-fixed e-BZ crystal")
    g = affine_closure(cfg.l, cfg.depth)
    views = [bza.BZAffineView(x) for x in g.nodes]
    for x, view in zip(g.nodes, views):
        res.tally("aperiodic", la.is_aperiodic(x), str(x))
        res.tally("weight", bza.weight_bz_affine(view) == la.weight_affine(x), str(x))
        for p in range(cfg.l):
            res.tally(
                "epsilon-star", bza.epsilon_hat_star_bz(view, p) == la.epsilon_hat(x, p, "star"), (str(x), p)
            )
    seen: dict = {}
    for x, view in zip(g.nodes, views):
        fp = _fingerprint(view, cfg.window, cfg.fingerprint)
        res.tally("fingerprints-distinct", fp not in seen, (str(seen.get(fp)), str(x)))
        seen.setdefault(fp, x)
    counts = Counter(la.weight_affine(x) for x in g.nodes)
    expected = Counter(
        la.weight_affine(x) for h in range(cfg.depth + 1) for x in la.data_of_height(cfg.l, h, aperiodic_only=True)
    )
    for w in sorted(set(counts) | set(expected), key=str):
        res.tally("count-per-weight", counts[w] == expected[w], (str(w), counts[w], expected[w]))
    res.tables["counts"] = {str(w): counts[w] for w in sorted(counts, key=str)}
    res.tables["nodes"] = len(g.nodes)
    return res


def partition_count(m: int) -> int:
    return sum(1 for _ in my.partitions(m))


def suite_ltv(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("ltv", "decomposition by maximal elements")
    rng = np.random.default_rng(cfg.seed)
    for n in range(cfg.samples):
        l = 3 + n % 2
        a = la.random_periodic(rng, l, int(rng.integers(1, 5)), 3)
        a0, z = la.strip_z(a)
        res.tally("reassembly", la.add(a0, la.a_z_of(z, l)) == a, str(a))
        res.tally("aperiodic-part", la.is_aperiodic(a0), str(a))
        res.tally("maximal-part", la.is_maximal(la.a_z_of(z, l)), str(a))
        base, tw = la.tensor_T_view(a)
        res.tally("T-weight", la.weight_affine(a) == la.weight_affine(a0) + tw, str(a))
        for p in range(l):
            for op in la.OPS:
                lhs = la.apply_hat(a, p, op)
                rhs = la.apply_hat(a0, p, op)
                ok = (lhs is None and rhs is None) or (
                    lhs is not None and rhs is not None and la.tensor_T_view(lhs) == (rhs, tw)
                )
                res.tally("T-equivariance", ok, (str(a), p, op))
    for l in (3, 4):
        for z in ((1,), (0, 1), (1, 1), (2,), (0, 0, 1), (1, 0, 2)):
            res.tally("weight-of-maximal", la.weight_affine(la.a_z_of(z, l)) == WeightVector.delta(l, -la.m_of(z)), (l, z))
    l = cfg.l
    for m in range(4):
        maximal = [x for x in la.data_of_height(l, m * l) if la.is_maximal(x)]
        res.tally("maximal-count-is-p(m)", len(maximal) == partition_count(m), (m, len(maximal)))
        res.tables[f"maximal-of-weight-{m}delta"] = len(maximal)
    # |B_w| = sum_m p(m) |aperiodic of weight w + m delta|
    top = 7 if l == 3 else l + 3
    full = {h: Counter(la.weight_affine(x) for x in la.data_of_height(l, h)) for h in range(top + 1)}
    aper = {h: Counter(la.weight_affine(x) for x in la.data_of_height(l, h, True)) for h in range(top + 1)}
    for h in range(top + 1):
        for w, cnt in full[h].items():
            total = sum(
                partition_count(m) * aper[h - m * l][w + WeightVector.delta(l, m)] for m in range(h // l + 1)
            )
            res.tally("component-bookkeeping", total == cnt, (str(w), cnt, total))
    return res


def suite_corrupted(cfg: RunConfig) -> SuiteResult:
    """A deliberately broken fixture; always fails with a witness."""
    res = SuiteResult("corrupted-fixture", "tropical Plucker witness reporting")
    M = bzf.BZFinite.zero(Interval(1, 2)).with_component((1, 3), 1)
    for v in bzf.check_tropical_plucker(M) or [None]:
        res.tally("tropical-plucker", v is None, v)
    return res


SUITES = {
    "plucker": suite_plucker,
    "phi-example": suite_phi_example,
    "crystal-iso": suite_crystal_iso,
    "uniqueness": suite_uniqueness,
    "kostant": suite_kostant,
    "maya": suite_maya,
    "stabilization": suite_stabilization,
    "maximal-collapse": suite_maximal_collapse,
    "e-bz": suite_e_bz,
    "thm-main": suite_thm_main,
    "dual-map": suite_dual_map,
    "ltv": suite_ltv,
    "inverse": suite_inverse,
    "corrupted-fixture": suite_corrupted,
}


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("BZKIT_THREADS", "1")))
    except ValueError:
        return 1


def run_suites(names, cfg: RunConfig) -> list[SuiteResult]:
    names = sorted(set(names))
    with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
        results = list(pool.map(lambda n: SUITES[n](cfg), names))
    return sorted(results, key=lambda r: r.name)
