"""Game state: defender arc positions, intruder planar positions, liveness."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["DefenderState", "IntruderState", "GameState"]


@dataclass
class DefenderState:
    id: int
    s: float
    alive: bool = True


@dataclass
class IntruderState:
    id: int
    x: np.ndarray
    alive: bool = True
    removed: bool = False
    scored: bool = False

    def __post_init__(self) -> None:
        self.x = np.asarray(self.x, dtype=float)


@dataclass
class GameState:
    defenders: list[DefenderState]
    intruders: list[IntruderState]
    time: float = 0.0
    score: int = 0

    @staticmethod
    def from_positions(defender_arcs, intruder_points) -> "GameState":
        defenders = [DefenderState(i + 1, float(s)) for i, s in enumerate(defender_arcs)]
        intruders = [
            IntruderState(j + 1, np.asarray(x, dtype=float))
            for j, x in enumerate(intruder_points)
        ]
        return GameState(defenders, intruders)

    def alive_defenders(self) -> list[DefenderState]:
        return [d for d in self.defenders if d.alive]

    def alive_intruders(self, include_removed: bool = True) -> list[IntruderState]:
        return [
            a
            for a in self.intruders
            if a.alive and (include_removed or not a.removed)
        ]

    def defender(self, did: int) -> DefenderState:
        return next(d for d in self.defenders if d.id == did)

    def intruder(self, aid: int) -> IntruderState:
        return next(a for a in self.intruders if a.id == aid)

    def clone(self) -> "GameState":
        return GameState(
            [DefenderState(d.id, d.s, d.alive) for d in self.defenders],
            [
                IntruderState(a.id, a.x.copy(), a.alive, a.removed, a.scored)
                for a in self.intruders
            ],
            self.time,
            self.score,
        )

    def to_json_dict(self) -> dict:
        return {
            "time": self.time,
            "score": self.score,
            "defenders": [
                {"id": d.id, "s": d.s, "alive": d.alive} for d in self.defenders
            ],
            "intruders": [
                {
                    "id": a.id,
                    "x": [float(a.x[0]), float(a.x[1])],
                    "alive": a.alive,
                    "removed": a.removed,
                    "scored": a.scored,
                }
                for a in self.intruders
            ],
        }
