"""Convert cluster rankings into credit-point price tags.

A ranking of n players is cut into len(group_values) rank bands of
ceil(n / len(group_values)) players each; the last band absorbs the
remainder. Every player in a band is priced at that band's credit value.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .ranking import ALL_CLUSTERS, Cluster, ClusterRanking


@dataclass(frozen=True)
class CreditConfig:
    group_values: tuple[int, ...] = (10, 9, 8, 7)

    def __post_init__(self):
        if not self.group_values:
            raise ValueError("group_values must not be empty")
        if any(v <= 0 for v in self.group_values):
            raise ValueError("group values must be positive")
        if any(a <= b for a, b in zip(self.group_values, self.group_values[1:])):
            raise ValueError("group values must be strictly descending")


@dataclass(frozen=True)
class CreditAssignment:
    cluster: Cluster
    rank: int
    player_id: str
    credit: int


@dataclass(frozen=True)
class CreditTable:
    assignments: tuple[CreditAssignment, ...]
    _index: dict[tuple[Cluster, str], int] = field(init=False, repr=False,
                                                   compare=False, hash=False)

    def __post_init__(self):
        index = {(a.cluster, a.player_id): a.credit for a in self.assignments}
        object.__setattr__(self, "_index", index)

    def credit(self, cluster: Cluster, player_id: str) -> int:
        try:
            return self._index[(cluster, player_id)]
        except KeyError:
            raise ValueError("no credit assigned to player %r in cluster %s"
                             % (player_id, cluster.value)) from None


def assign_credits(ranking: ClusterRanking,
                   config: CreditConfig | None = None) -> list[CreditAssignment]:
    """Price one ranking; raises on an empty ranking because there is no
    band size to derive."""
    if config is None:
        config = CreditConfig()
    n = len(ranking.entries)
    if n == 0:
        raise ValueError("cannot assign credits to an empty %s ranking"
                         % ranking.cluster.value)
    band = math.ceil(n / len(config.group_values))
    out = []
    for i, entry in enumerate(ranking.entries):
        value = config.group_values[i // band]
        out.append(CreditAssignment(ranking.cluster, i + 1, entry.player_id, value))
    return out


def build_credit_table(rankings: dict[Cluster, ClusterRanking],
                       config: CreditConfig | None = None) -> CreditTable:
    assignments: list[CreditAssignment] = []
    for cluster in ALL_CLUSTERS:
        if cluster in rankings:
            assignments.extend(assign_credits(rankings[cluster], config))
    return CreditTable(tuple(assignments))


def credits_to_csv(table: CreditTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["cluster", "rank", "player_id", "credit"])
    for a in table.assignments:
        w.writerow([a.cluster.value, a.rank, a.player_id, a.credit])
    return buf.getvalue()
