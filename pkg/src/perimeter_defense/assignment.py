"""Defense assignment pipeline: uncapturable-intruder removal, 2v1 pair
assignment over independent regions, implicit-assignment eligibility, and
1v1 maximum-cardinality matching, plus the MM and MIS baselines.

Everything is deterministic: intruders and defenders are visited in
ascending id order, argmax ties break toward the smallest region id, and
matching explores augmenting paths in ascending neighbor order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import Perimeter, SpeedModel, breach_target_pincer
from .regions import Decomposition, q_lg_value
from .state import GameState

__all__ = [
    "EnvelopeViolation",
    "TwoVOneEntry",
    "AssignmentSet",
    "remove_uncapturable",
    "assign_2v1",
    "implicit_eligible",
    "assign_1v1",
    "lgr_defense",
    "mm_assignment",
    "mis_assignment",
]


class EnvelopeViolation(RuntimeError):
    """Raised when the state leaves the q_hat <= 1 guarantee envelope."""


@dataclass(frozen=True)
class TwoVOneEntry:
    region_id: int
    pair: tuple[int, int]  # (right defender id, left defender id)
    intruder_id: int
    n_d: int  # defender subteam size of the region at assignment time

    def to_json_list(self) -> list:
        return [self.region_id, list(self.pair), self.intruder_id, self.n_d]


@dataclass(frozen=True)
class AssignmentSet:
    removed: frozenset[int]
    two_v_one: tuple[TwoVOneEntry, ...]
    one_v_one: dict[int, int]  # defender id -> intruder id
    implicit_eligible: frozenset[int]  # region ids of Eq.-eligible entries
    unassigned_defenders: frozenset[int]

    def defenders_2v1(self) -> set[int]:
        out: set[int] = set()
        for e in self.two_v_one:
            out.update(e.pair)
        return out

    def to_json_dict(self) -> dict:
        return {
            "removed": sorted(self.removed),
            "two_v_one": [e.to_json_list() for e in self.two_v_one],
            "one_v_one": {str(k): self.one_v_one[k] for k in sorted(self.one_v_one)},
            "implicit_eligible": sorted(self.implicit_eligible),
            "unassigned_defenders": sorted(self.unassigned_defenders),
        }


def remove_uncapturable(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    decomposition: Decomposition | None = None,
) -> set[int]:
    """Greedy single-pass removal of intruders whose absence lowers the
    guaranteed total score; leaves the residual game with score zero."""
    decomp = decomposition or Decomposition(perimeter, speeds, state)
    mask = decomp.int_mask(exclude_ids=[a.id for a in state.intruders if a.removed])
    current = q_lg_value(decomp, mask)
    removed: set[int] = set()
    if current == 0:
        return removed
    for rank, aid in enumerate(decomp.int_ids):
        if current == 0:
            break
        if not mask[rank]:
            continue
        trial = mask.copy()
        trial[rank] = False
        q_new = q_lg_value(decomp, trial)
        if q_new < current:
            removed.add(aid)
            mask = trial
            current = q_new
    assert current == 0, "removal pass failed to reach a zero-score game"
    return removed


def assign_2v1(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    removed: set[int],
    decomposition: Decomposition | None = None,
) -> tuple[tuple[TwoVOneEntry, ...], set[int], set[int]]:
    """Pair assignment loop over independent regions with score one.

    Regions are served from the largest defender subteam down; each picks
    the paired-defense-region intruder closest to the pincer meeting point.
    """
    decomp = decomposition or Decomposition(perimeter, speeds, state, coop="lazy")
    mask = decomp.int_mask(exclude_ids=removed)
    n_d = decomp.inside_counts()
    q_hat = decomp.q_hat_all(mask)
    if np.any(q_hat >= 2):
        worst = int(np.argmax(q_hat)) + 1
        raise EnvelopeViolation(
            f"outside guarantee envelope: region {worst} has q_hat={int(q_hat[worst - 1])}"
        )
    entries: list[TwoVOneEntry] = []
    d_1v1 = {d.id for d in state.alive_defenders()}
    while True:
        cands = np.nonzero(q_hat >= 1)[0]
        if len(cands) == 0:
            break
        m = int(min(cands, key=lambda k: (-n_d[k], k))) + 1
        rp = decomp.indep_row(m) & ~decomp.coop_row(m) & mask
        if not rp.any():
            raise EnvelopeViolation(
                f"outside guarantee envelope: region {m} has q_hat=1 but an "
                "empty paired-defense region"
            )
        r_rank, l_rank = decomp.region_pair_ranks(m)
        pair_ids = (decomp.def_ids[r_rank], decomp.def_ids[l_rank])
        s_mid = breach_target_pincer(
            perimeter, (decomp.def_arcs[r_rank], decomp.def_arcs[l_rank])
        )
        target = perimeter.point_at(s_mid)
        ranks = np.nonzero(rp)[0]
        dists = np.hypot(*(decomp.int_pos[ranks] - target).T)
        pick = ranks[
            min(range(len(ranks)), key=lambda i: (dists[i], decomp.int_ids[ranks[i]]))
        ]
        entries.append(
            TwoVOneEntry(m, pair_ids, decomp.int_ids[pick], int(n_d[m - 1]))
        )
        d_1v1.discard(pair_ids[0])
        d_1v1.discard(pair_ids[1])
        mask = mask.copy()
        mask[pick] = False
        q_hat = decomp.q_hat_all(mask)
        if np.any(q_hat >= 2):
            raise EnvelopeViolation("outside guarantee envelope during 2v1 loop")
    d_2v1 = {d for e in entries for d in e.pair}
    return tuple(entries), d_2v1, d_1v1


def implicit_eligible(entry: TwoVOneEntry, two_v_one) -> bool:
    """A pair may receive an implicit assignment only when it dominates every
    other 2v1 entry it shares a defender with (strictly larger subteam)."""
    mine = set(entry.pair)
    for other in two_v_one:
        if other is entry or other.region_id == entry.region_id:
            continue
        if mine & set(other.pair) and not entry.n_d > other.n_d:
            return False
    return True


def _max_matching(neighbors: list[list[int]], n_right: int) -> list[int]:
    """Kuhn's augmenting-path matching; returns right-to-left matches."""
    match_right = [-1] * n_right

    def try_augment(u: int, seen: list[bool]) -> bool:
        for v in neighbors[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or try_augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in range(len(neighbors)):
        try_augment(u, [False] * n_right)
    return match_right


def assign_1v1(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    removed: set[int],
    two_v_one,
    d_1v1: set[int],
    decomposition: Decomposition | None = None,
) -> dict[int, int]:
    """Maximum-cardinality matching of free defenders (and eligible pairs,
    via their implicit zones) to unassigned intruders; only the edges of the
    singleton defenders are returned."""
    decomp = decomposition or Decomposition(perimeter, speeds, state, coop="lazy")
    assigned = {e.intruder_id for e in two_v_one}
    mask = decomp.int_mask(exclude_ids=removed | assigned)
    right = np.nonzero(mask)[0]
    col_of = {rank: i for i, rank in enumerate(right)}
    rank_of_def = {d: i for i, d in enumerate(decomp.def_ids)}

    neighbors: list[list[int]] = []
    singles = sorted(d_1v1)
    for did in singles:
        row = ~decomp.in_awin[rank_of_def[did]]
        neighbors.append([col_of[r] for r in right if row[r]])
    for entry in two_v_one:
        if not implicit_eligible(entry, two_v_one):
            continue
        zone = (
            ~decomp.in_awin[rank_of_def[entry.pair[0]]]
            & ~decomp.in_awin[rank_of_def[entry.pair[1]]]
        )
        neighbors.append([col_of[r] for r in right if zone[r]])

    match_right = _max_matching(neighbors, len(right))
    out: dict[int, int] = {}
    for col, u in enumerate(match_right):
        if 0 <= u < len(singles):
            out[singles[u]] = decomp.int_ids[right[col]]
    return out


def lgr_defense(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    removed: set[int] | None = None,
    decomposition: Decomposition | None = None,
) -> AssignmentSet:
    """Full defense pipeline: removal (normally cached by the caller across
    ticks), then 2v1 and 1v1 assignment on the residual game."""
    decomp = decomposition or Decomposition(perimeter, speeds, state, coop="lazy")
    if removed is None:
        removed = remove_uncapturable(state, perimeter, speeds, decomposition=decomp)
    entries, d_2v1, d_1v1 = assign_2v1(
        state, perimeter, speeds, removed, decomposition=decomp
    )
    one = assign_1v1(
        state, perimeter, speeds, removed, entries, d_1v1, decomposition=decomp
    )
    eligible = frozenset(
        e.region_id for e in entries if implicit_eligible(e, entries)
    )
    unassigned = frozenset(
        d.id
        for d in state.alive_defenders()
        if d.id not in d_2v1 and d.id not in one
    )
    return AssignmentSet(
        removed=frozenset(removed),
        two_v_one=entries,
        one_v_one=one,
        implicit_eligible=eligible,
        unassigned_defenders=unassigned,
    )


def mm_assignment(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    decomposition: Decomposition | None = None,
) -> tuple[dict[int, int], int]:
    """Maximum-cardinality matching of singleton defenders; returns the
    matching and the score bound Q_MM."""
    decomp = decomposition or Decomposition(perimeter, speeds, state, coop="lazy")
    n_a = decomp.n_int
    neighbors = [
        [j for j in range(n_a) if not decomp.in_awin[i, j]]
        for i in range(decomp.n_def)
    ]
    match_right = _max_matching(neighbors, n_a)
    matching = {
        decomp.def_ids[u]: decomp.int_ids[col]
        for col, u in enumerate(match_right)
        if u != -1
    }
    return matching, n_a - len(matching)


def mis_assignment(
    state: GameState,
    perimeter: Perimeter,
    speeds: SpeedModel,
    decomposition: Decomposition | None = None,
) -> int:
    """Score bound from the exhaustive maximum-independent-set assignment
    (singleton and pair nodes, no shared defenders or intruders)."""
    decomp = decomposition or Decomposition(perimeter, speeds, state, coop="lazy")
    n_def, n_int = decomp.n_def, decomp.n_int
    if n_def + n_int > 14:
        raise ValueError("MIS instance too large")
    if n_int == 0:
        return 0

    # units[j]: defender-id frozensets that can commit to intruder j
    units: list[list[frozenset[int]]] = [[] for _ in range(n_int)]
    for i in range(n_def):
        for j in range(n_int):
            if not decomp.in_awin[i, j]:
                units[j].append(frozenset({decomp.def_ids[i]}))
    for r in range(n_def):
        for l in range(n_def):
            if r == l:
                continue
            k = decomp.region_id(r, l)
            rp = decomp.indep_row(k) & ~decomp.coop_row(k)
            for j in np.nonzero(rp)[0]:
                units[j].append(frozenset({decomp.def_ids[r], decomp.def_ids[l]}))

    best = 0

    def dfs(j: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        if count + (n_int - j) <= best:
            return
        if j == n_int:
            best = max(best, count)
            return
        for unit in units[j]:
            if not unit & used:
                dfs(j + 1, used | unit, count + 1)
        dfs(j + 1, used, count)

    dfs(0, frozenset(), 0)
    return n_int - best
