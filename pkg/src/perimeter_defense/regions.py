"""Local-game decomposition: region enumeration, scores, and the guaranteed
total score via maximum-weight independent set on circular arcs.

Region ids: alive defenders sorted by id give ranks 0..n-1; the ordered pair
(right rank r, left rank l) yields id ``r * n + l + 1`` in 1..n^2.  The pair
(i, i) is the degenerate region: one defender's full winning region, whose
interval is the whole boundary minus the defender position.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    ArcInterval,
    Perimeter,
    SpeedModel,
    _margin_lipschitz,
    cooperative_margin,
    time_tolerance,
    win_margin_1v1,
)
from .state import GameState

__all__ = [
    "LocalGameRegion",
    "PartitionResult",
    "Decomposition",
    "enumerate_regions",
    "regions_disjoint",
    "q_lg",
    "q_lg_bruteforce",
]


@dataclass(frozen=True)
class LocalGameRegion:
    id: int
    pair: tuple[int, int]  # (right defender id, left defender id)
    interval: ArcInterval
    defenders_inside: tuple[int, ...]
    intruders_coop: tuple[int, ...]
    intruders_indep: tuple[int, ...]

    @property
    def n_d(self) -> int:
        return len(self.defenders_inside)

    @property
    def n_a(self) -> int:
        return len(self.intruders_coop)

    @property
    def n_hat_a(self) -> int:
        return len(self.intruders_indep)

    @property
    def delta_n_a(self) -> int:
        return self.n_hat_a - self.n_a

    @property
    def q(self) -> int:
        return self.n_a - self.n_d

    @property
    def q_hat(self) -> int:
        return self.n_hat_a - self.n_d

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "pair": list(self.pair),
            "interval": {
                "start": self.interval.start,
                "end": self.interval.end,
                "degenerate_full": self.interval.degenerate_full,
            },
            "n_d": self.n_d,
            "n_a": self.n_a,
            "n_hat_a": self.n_hat_a,
            "q": self.q,
            "q_hat": self.q_hat,
            "defenders_inside": list(self.defenders_inside),
            "intruders_coop": list(self.intruders_coop),
            "intruders_indep": list(self.intruders_indep),
        }


@dataclass(frozen=True)
class PartitionResult:
    q_lg: int
    g_star: tuple[int, ...]
    contributions: dict[int, int] = field(default_factory=dict)


def regions_disjoint(a: LocalGameRegion, b: LocalGameRegion) -> bool:
    """True iff the regions' open arc intervals share no arc."""
    return not a.interval.overlaps(b.interval)


class Decomposition:
    """Membership matrices for one state snapshot.

    Rows are alive defenders (sorted by id), columns alive intruders (sorted
    by id, removed ones included; callers mask as needed).  Cooperative
    memberships can be computed lazily per region for the per-tick path.
    """

    def __init__(
        self,
        perimeter: Perimeter,
        speeds: SpeedModel,
        state: GameState,
        coop: str = "full",
    ):
        self.perimeter = perimeter
        self.speeds = speeds
        defenders = sorted(state.alive_defenders(), key=lambda d: d.id)
        intruders = sorted(state.alive_intruders(), key=lambda a: a.id)
        self.def_ids = [d.id for d in defenders]
        self.def_arcs = np.array([perimeter.wrap(d.s) for d in defenders])
        self.int_ids = [a.id for a in intruders]
        self.int_pos = np.array([a.x for a in intruders]).reshape(len(intruders), 2)
        self.n_def = len(defenders)
        self.n_int = len(intruders)
        self._eta_t = time_tolerance(perimeter, speeds)
        self._lip = _margin_lipschitz(speeds)
        self._gap = perimeter.length / perimeter.sample_resolution

        # race distances from every intruder to every boundary sample
        self.race = np.empty((self.n_int, perimeter.sample_resolution))
        for j in range(self.n_int):
            self.race[j] = perimeter.race_distances(self.int_pos[j])

        L = perimeter.length
        rel = np.mod(perimeter.sample_arcs[None, :] - self.def_arcs[:, None], L)
        self.def_arc_short = np.minimum(rel, L - rel)

        self.in_awin = self._classify_awin()
        self._coop_rows: dict[int, np.ndarray] = {}
        if coop == "full":
            for k in range(self.n_def * self.n_def):
                self.coop_row(k + 1)
        elif coop != "lazy":
            raise ValueError("coop must be 'full' or 'lazy'")

    # -- membership matrices -------------------------------------------------

    def _classify_awin(self) -> np.ndarray:
        v_d, v_a = self.speeds.v_defender, self.speeds.v_intruder
        coarse = np.full((self.n_def, self.n_int), -math.inf)
        for i in range(self.n_def):
            prof = self.def_arc_short[i][None, :] / v_d - self.race / v_a
            if self.n_int:
                coarse[i] = prof.max(axis=1)
        member = coarse > self._eta_t
        band = 0.5 * self._lip * self._gap
        ambiguous = ~member & (coarse + band > self._eta_t)
        for i, j in zip(*np.nonzero(ambiguous)):
            m = win_margin_1v1(
                self.perimeter, self.speeds, self.def_arcs[i], self.int_pos[j]
            )
            member[i, j] = m > self._eta_t
        return member

    def region_pair_ranks(self, region_id: int) -> tuple[int, int]:
        k = region_id - 1
        return k // self.n_def, k % self.n_def

    def region_id(self, r_rank: int, l_rank: int) -> int:
        return r_rank * self.n_def + l_rank + 1

    def interval(self, region_id: int) -> ArcInterval:
        r, l = self.region_pair_ranks(region_id)
        if r == l:
            s = float(self.def_arcs[r])
            return ArcInterval(s, s, self.perimeter.length, degenerate_full=True)
        return ArcInterval(
            float(self.def_arcs[r]), float(self.def_arcs[l]), self.perimeter.length
        )

    def indep_row(self, region_id: int) -> np.ndarray:
        r, l = self.region_pair_ranks(region_id)
        if r == l:
            return self.in_awin[r]
        return self.in_awin[r] & self.in_awin[l]

    def coop_row(self, region_id: int) -> np.ndarray:
        row = self._coop_rows.get(region_id)
        if row is not None:
            return row
        r, l = self.region_pair_ranks(region_id)
        if r == l:
            row = self.in_awin[r].copy()
        else:
            row = self._coop_membership(r, l)
        self._coop_rows[region_id] = row
        return row

    def _coop_membership(self, r_rank: int, l_rank: int) -> np.ndarray:
        per = self.perimeter
        v_d, v_a = self.speeds.v_defender, self.speeds.v_intruder
        s_r = float(self.def_arcs[r_rank])
        s_l = float(self.def_arcs[l_rank])
        delta = per.arc_ccw(s_r, s_l)
        member = np.zeros(self.n_int, dtype=bool)
        if delta == 0.0 or self.n_int == 0:
            return member
        rel = np.mod(per.sample_arcs - s_r, per.length)
        mask = (rel > 0.0) & (rel < delta)
        if mask.sum() >= 8:
            pincer = np.minimum(rel[mask], delta - rel[mask])
            coarse = (pincer[None, :] / v_d - self.race[:, mask] / v_a).max(axis=1)
            member = coarse > self._eta_t
            band = 0.5 * self._lip * self._gap
            ambiguous = ~member & (coarse + band > self._eta_t)
            idx = np.nonzero(ambiguous)[0]
        else:
            idx = np.arange(self.n_int)
        for j in idx:
            m = cooperative_margin(per, self.speeds, (s_r, s_l), self.int_pos[j])
            member[j] = m > self._eta_t
        return member

    # -- counts and scores ---------------------------------------------------

    def inside_counts(self) -> np.ndarray:
        """n_D per region: defenders strictly inside the open interval."""
        n = self.n_def
        counts = np.zeros(n * n, dtype=int)
        L = self.perimeter.length
        for k in range(n * n):
            r, l = k // n, k % n
            if r == l:
                counts[k] = n - 1
                continue
            delta = np.mod(self.def_arcs[l] - self.def_arcs[r], L)
            rel = np.mod(self.def_arcs - self.def_arcs[r], L)
            counts[k] = int(np.sum((rel > 0.0) & (rel < delta)))
        return counts

    def int_mask(self, include_ids=None, exclude_ids=()) -> np.ndarray:
        mask = np.ones(self.n_int, dtype=bool)
        if include_ids is not None:
            include = set(include_ids)
            mask &= np.array([i in include for i in self.int_ids], dtype=bool)
        exclude = set(exclude_ids)
        if exclude:
            mask &= np.array([i not in exclude for i in self.int_ids], dtype=bool)
        return mask

    def q_hat_all(self, mask: np.ndarray) -> np.ndarray:
        n = self.n_def
        n_d = self.inside_counts()
        q_hat = np.empty(n * n, dtype=int)
        for k in range(n * n):
            q_hat[k] = int(self.indep_row(k + 1)[mask].sum()) - n_d[k]
        return q_hat

    def q_all(self, mask: np.ndarray) -> np.ndarray:
        n = self.n_def
        n_d = self.inside_counts()
        q = np.empty(n * n, dtype=int)
        for k in range(n * n):
            q[k] = int(self.coop_row(k + 1)[mask].sum()) - n_d[k]
        return q

    def regions(self, mask: np.ndarray | None = None) -> list[LocalGameRegion]:
        if mask is None:
            mask = np.ones(self.n_int, dtype=bool)
        out = []
        n = self.n_def
        n_d_inside = self.inside_counts()
        L = self.perimeter.length
        ids = np.array(self.int_ids, dtype=int)
        for k in range(1, n * n + 1):
            r, l = self.region_pair_ranks(k)
            coop = self.coop_row(k) & mask
            indep = self.indep_row(k) & mask
            if r == l:
                inside = tuple(d for d in self.def_ids if d != self.def_ids[r])
            else:
                delta = np.mod(self.def_arcs[l] - self.def_arcs[r], L)
                rel = np.mod(self.def_arcs - self.def_arcs[r], L)
                inside = tuple(
                    self.def_ids[i]
                    for i in range(n)
                    if 0.0 < rel[i] < delta
                )
            assert len(inside) == n_d_inside[k - 1]
            out.append(
                LocalGameRegion(
                    id=k,
                    pair=(self.def_ids[r], self.def_ids[l]),
                    interval=self.interval(k),
                    defenders_inside=inside,
                    intruders_coop=tuple(int(i) for i in ids[coop]),
                    intruders_indep=tuple(int(i) for i in ids[indep]),
                )
            )
        return out


# -- maximum-weight independent set on circular arcs --------------------------


def _arcs_overlap(s1: float, l1: float, s2: float, l2: float, L: float) -> bool:
    if l1 <= 0.0 or l2 <= 0.0:
        return False
    r12 = np.mod(s2 - s1, L)
    r21 = np.mod(s1 - s2, L)
    return r12 == 0.0 or (0.0 < r12 < l1) or (0.0 < r21 < l2)


def _linear_wis(items: list[tuple[float, float, int]]) -> int:
    """Weighted interval scheduling over non-wrapping open intervals.

    items: (start, end, weight); intervals sharing only an endpoint are
    compatible.  Returns the optimal total weight.
    """
    if not items:
        return 0
    items = sorted(items, key=lambda it: it[1])
    ends = [it[1] for it in items]
    best = [0] * (len(items) + 1)
    for i, (s, e, w) in enumerate(items):
        j = bisect.bisect_right(ends, s, 0, i)
        best[i + 1] = max(best[i], best[j] + w)
    return best[-1]


def _circular_wis_value(items: list[tuple[float, float, int, int]], L: float) -> int:
    """Optimal weight over pairwise-disjoint open circular arcs.

    items: (start, length, weight, id) with weight > 0 and 0 < length < L.
    """
    if not items:
        return 0
    # cut point crossed by the fewest arcs
    best_cut, best_crossed = None, None
    for cand in items:
        c = cand[0]
        crossed = [it for it in items if 0.0 < np.mod(c - it[0], L) < it[1]]
        if best_crossed is None or len(crossed) < len(best_crossed):
            best_cut, best_crossed = c, crossed
    c = best_cut
    free = [it for it in items if not (0.0 < np.mod(c - it[0], L) < it[1])]
    lin = [(np.mod(s - c, L), np.mod(s - c, L) + ln, w) for s, ln, w, _ in free]
    value = _linear_wis(lin)
    for s_a, l_a, w_a, id_a in best_crossed:
        rest = [
            it
            for it in items
            if it[3] != id_a and not _arcs_overlap(s_a, l_a, it[0], it[1], L)
        ]
        base = np.mod(s_a + l_a, L)
        lin = [
            (np.mod(s - base, L), np.mod(s - base, L) + ln, w) for s, ln, w, _ in rest
        ]
        value = max(value, w_a + _linear_wis(lin))
    return value


def _solve_mwis(
    nondeg: list[tuple[float, float, int, int]],
    deg: list[tuple[int, int]],
    L: float,
) -> tuple[int, tuple[int, ...]]:
    """Optimal value and the lexicographically smallest optimal id set.

    ``nondeg``: (start, length, weight, id); ``deg``: (weight, id) for
    degenerate full-boundary arcs, which conflict with every other arc.
    """
    best = _circular_wis_value(nondeg, L)
    for w, _ in deg:
        best = max(best, w)
    if best <= 0:
        return 0, ()
    chosen: list[tuple[float, float, int, int]] = []
    chosen_ids: list[int] = []
    chosen_w = 0
    candidates = sorted(
        [(it[3], "n", it) for it in nondeg] + [(d[1], "d", d) for d in deg]
    )
    for cid, kind, it in candidates:
        if kind == "d":
            if not chosen_ids and it[0] == best:
                return best, (cid,)
            continue
        s, ln, w, _ = it
        if any(_arcs_overlap(s, ln, c[0], c[1], L) for c in chosen):
            continue
        rest = [
            jt
            for jt in nondeg
            if jt[3] > cid
            and not _arcs_overlap(s, ln, jt[0], jt[1], L)
            and not any(_arcs_overlap(jt[0], jt[1], c[0], c[1], L) for c in chosen)
        ]
        if chosen_w + w + _circular_wis_value(rest, L) == best:
            chosen.append(it)
            chosen_ids.append(cid)
            chosen_w += w
            if chosen_w == best:
                return best, tuple(chosen_ids)
    raise AssertionError("MWIS reconstruction failed")


def _positive_arc_items(decomp: Decomposition, mask: np.ndarray):
    """Positive-weight regions as circular arcs for the MWIS instance."""
    n = decomp.n_def
    n_d = decomp.inside_counts()
    L = decomp.perimeter.length
    nondeg, deg = [], []
    for k in range(1, n * n + 1):
        w = int(decomp.coop_row(k)[mask].sum()) - n_d[k - 1]
        if w <= 0:
            continue
        r, l = decomp.region_pair_ranks(k)
        if r == l:
            deg.append((w, k))
        else:
            start = float(decomp.def_arcs[r])
            length = float(np.mod(decomp.def_arcs[l] - decomp.def_arcs[r], L))
            nondeg.append((start, length, w, k))
    return nondeg, deg


def q_lg_value(decomp: Decomposition, mask: np.ndarray) -> int:
    """Guaranteed total score (value only, no partition reconstruction)."""
    nondeg, deg = _positive_arc_items(decomp, mask)
    best = _circular_wis_value(nondeg, decomp.perimeter.length)
    for w, _ in deg:
        best = max(best, w)
    return max(best, 0)


def _partition(decomp: Decomposition, mask: np.ndarray) -> PartitionResult:
    nondeg, deg = _positive_arc_items(decomp, mask)
    value, ids = _solve_mwis(nondeg, deg, decomp.perimeter.length)
    weights = {k: w for _, _, w, k in nondeg}
    weights.update({k: w for w, k in deg})
    return PartitionResult(
        q_lg=value,
        g_star=ids,
        contributions={k: weights[k] for k in ids},
    )


# -- public operations --------------------------------------------------------


def enumerate_regions(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    decomposition: Decomposition | None = None,
) -> list[LocalGameRegion]:
    """All N_D^2 local game regions over alive defenders and alive,
    non-removed intruders."""
    if not state.alive_defenders():
        raise ValueError("need at least one alive defender")
    decomp = decomposition or Decomposition(perimeter, speeds, state)
    mask = decomp.int_mask(
        exclude_ids=[a.id for a in state.intruders if a.removed]
    )
    return decomp.regions(mask)


def q_lg(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    decomposition: Decomposition | None = None,
) -> PartitionResult:
    """Exact guaranteed total score and one optimal disjoint region set
    (ties broken by the lexicographically smallest id set)."""
    decomp = decomposition or Decomposition(perimeter, speeds, state)
    mask = decomp.int_mask(
        exclude_ids=[a.id for a in state.intruders if a.removed]
    )
    return _partition(decomp, mask)


def q_lg_bruteforce(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    decomposition: Decomposition | None = None,
) -> PartitionResult:
    """Exhaustive oracle for the guaranteed total score (N_D <= 8)."""
    n_def = len(state.alive_defenders())
    if n_def > 8:
        raise ValueError("oracle instance too large")
    decomp = decomposition or Decomposition(perimeter, speeds, state)
    mask = decomp.int_mask(
        exclude_ids=[a.id for a in state.intruders if a.removed]
    )
    nondeg, deg = _positive_arc_items(decomp, mask)
    L = decomp.perimeter.length
    items = sorted(
        [(k, w, s, ln) for s, ln, w, k in nondeg]
        + [(k, w, 0.0, L) for w, k in deg]
    )
    degenerate_ids = {k for _, k in deg}

    def conflict(a, b) -> bool:
        if a[0] in degenerate_ids or b[0] in degenerate_ids:
            return True
        return _arcs_overlap(a[2], a[3], b[2], b[3], L)

    best_val = 0
    best_ids: tuple[int, ...] = ()

    def dfs(i: int, picked: list, val: int, remaining: int) -> None:
        nonlocal best_val, best_ids
        ids = tuple(p[0] for p in picked)
        if val > best_val or (val == best_val and val > 0 and ids < best_ids):
            best_val, best_ids = val, ids
        if i == len(items) or val + remaining < best_val:
            return
        item = items[i]
        rest = remaining - item[1]
        if not any(conflict(item, p) for p in picked):
            picked.append(item)
            dfs(i + 1, picked, val + item[1], rest)
            picked.pop()
        dfs(i + 1, picked, val, rest)

    dfs(0, [], 0, sum(it[1] for it in items))
    weights = {k: w for k, w, _, _ in items}
    return PartitionResult(
        q_lg=best_val,
        g_star=best_ids,
        contributions={k: weights[k] for k in best_ids},
    )
