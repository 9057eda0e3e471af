from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DeficiencyWitness:
    """Disjoint vertex sets ``S``, ``T``, a deleted-vertex choice ``U`` inside ``S``,
    a deleted-edge set ``H`` of ``G - U``, and the resulting slack."""

    S: tuple[int, ...]
    T: tuple[int, ...]
    U: tuple[int, ...] = ()
    H: tuple[tuple[int, int], ...] = ()
    slack: int = 0

    def relabel(self, ids) -> DeficiencyWitness:
        """Map vertex ids through ``ids`` (e.g. back into a parent graph)."""
        m = lambda vs: tuple(ids[v] for v in vs)  # noqa: E731
        return DeficiencyWitness(
            m(self.S), m(self.T), m(self.U),
            tuple(tuple(sorted((ids[u], ids[v]))) for u, v in self.H),
            self.slack,
        )

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "T": list(self.T),
            "U": list(self.U),
            "H": [list(e) for e in self.H],
            "slack": self.slack,
        }

    @classmethod
    def from_dict(cls, d: dict) -> DeficiencyWitness:
        return cls(
            tuple(d["S"]), tuple(d["T"]), tuple(d["U"]),
            tuple(tuple(e) for e in d["H"]), int(d["slack"]),
        )
