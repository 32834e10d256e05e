"""Load, validate and query the player statistics dataset.

The dataset is three CSV files: players.csv (identity and flags),
batting.csv and bowling.csv (one row per player per season). Loading
rejects schema violations, negative counts, impossible stat lines,
unknown player ids and duplicate (player, season) rows, naming the file,
row and rule in the error.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import IO


class DatasetError(ValueError):
    """A statistics file violates the schema or a stat invariant."""


class UnknownPlayerError(ValueError):
    """A player id is not present in the dataset."""


@dataclass(frozen=True)
class PlayerMeta:
    player_id: str
    name: str
    is_wicketkeeper: bool = False
    is_retired: bool = False

    def __post_init__(self):
        if not self.player_id:
            raise ValueError("player id must be non-empty")
        if not self.name:
            raise ValueError("player name must be non-empty")


@dataclass(frozen=True)
class BattingRecord:
    """One player's batting counts, for a season or aggregated (season None)."""

    player_id: str
    season: int | None = None
    innings: int = 0
    not_outs: int = 0
    runs: int = 0
    balls: int = 0
    hundreds: int = 0
    fifties: int = 0
    fours: int = 0
    sixes: int = 0

    def __post_init__(self):
        for f in COUNT_FIELDS_BATTING:
            if getattr(self, f) < 0:
                raise ValueError("%s must be non-negative" % f)
        if self.not_outs > self.innings:
            raise ValueError("not_outs (%d) exceeds innings (%d)" % (self.not_outs, self.innings))
        if 4 * self.fours + 6 * self.sixes > self.runs:
            raise ValueError("boundary runs (4*fours + 6*sixes = %d) exceed runs (%d)"
                             % (4 * self.fours + 6 * self.sixes, self.runs))
        if self.fours + self.sixes > self.balls:
            raise ValueError("boundary balls (fours + sixes = %d) exceed balls faced (%d)"
                             % (self.fours + self.sixes, self.balls))
        if self.hundreds + self.fifties > self.innings:
            raise ValueError("hundreds + fifties (%d) exceed innings (%d)"
                             % (self.hundreds + self.fifties, self.innings))


@dataclass(frozen=True)
class BowlingRecord:
    """One player's bowling counts, for a season or aggregated (season None)."""

    player_id: str
    season: int | None = None
    innings: int = 0
    balls: int = 0
    runs_conceded: int = 0
    wickets: int = 0
    four_hauls: int = 0
    five_hauls: int = 0

    def __post_init__(self):
        for f in COUNT_FIELDS_BOWLING:
            if getattr(self, f) < 0:
                raise ValueError("%s must be non-negative" % f)
        if 4 * self.four_hauls + 5 * self.five_hauls > self.wickets:
            raise ValueError("haul wickets (4*four_hauls + 5*five_hauls = %d) exceed wickets (%d)"
                             % (4 * self.four_hauls + 5 * self.five_hauls, self.wickets))


COUNT_FIELDS_BATTING = ("innings", "not_outs", "runs", "balls",
                        "hundreds", "fifties", "fours", "sixes")
COUNT_FIELDS_BOWLING = ("innings", "balls", "runs_conceded", "wickets",
                        "four_hauls", "five_hauls")

PLAYERS_COLUMNS = ("id", "name", "is_wicketkeeper", "is_retired")
BATTING_COLUMNS = ("id", "season") + COUNT_FIELDS_BATTING
BOWLING_COLUMNS = ("id", "season") + COUNT_FIELDS_BOWLING


@dataclass(frozen=True)
class Dataset:
    """Immutable store of players plus their per-season batting and bowling rows.

    current_season is the latest season present anywhere in the data and
    total_league_innings is the experience denominator; both are derived at
    load time. Retired players stay in storage but are excluded from the
    candidate pools.
    """

    players: tuple[PlayerMeta, ...]
    batting: tuple[BattingRecord, ...]
    bowling: tuple[BowlingRecord, ...]
    current_season: int
    total_league_innings: int

    def player(self, player_id: str) -> PlayerMeta:
        for p in self.players:
            if p.player_id == player_id:
                return p
        raise UnknownPlayerError("unknown player id %r" % player_id)

    def has_player(self, player_id: str) -> bool:
        return any(p.player_id == player_id for p in self.players)

    def career_batting(self, player_id: str) -> BattingRecord:
        """Sum of all season rows; all-zero when the player never batted."""
        self.player(player_id)
        return _sum_records(BattingRecord, player_id,
                            [r for r in self.batting if r.player_id == player_id],
                            COUNT_FIELDS_BATTING)

    def career_bowling(self, player_id: str) -> BowlingRecord:
        self.player(player_id)
        return _sum_records(BowlingRecord, player_id,
                            [r for r in self.bowling if r.player_id == player_id],
                            COUNT_FIELDS_BOWLING)

    def current_batting(self, player_id: str) -> BattingRecord:
        """The current-season row, or an all-zero record when absent."""
        self.player(player_id)
        for r in self.batting:
            if r.player_id == player_id and r.season == self.current_season:
                return r
        return BattingRecord(player_id, self.current_season)

    def current_bowling(self, player_id: str) -> BowlingRecord:
        self.player(player_id)
        for r in self.bowling:
            if r.player_id == player_id and r.season == self.current_season:
                return r
        return BowlingRecord(player_id, self.current_season)

    def batting_candidates(self) -> list[str]:
        """Non-retired players with at least one batting row, sorted by id."""
        with_rows = {r.player_id for r in self.batting}
        return sorted(p.player_id for p in self.players
                      if not p.is_retired and p.player_id in with_rows)

    def bowling_candidates(self) -> list[str]:
        with_rows = {r.player_id for r in self.bowling}
        return sorted(p.player_id for p in self.players
                      if not p.is_retired and p.player_id in with_rows)


def _sum_records(cls, player_id, rows, count_fields):
    totals = {f: 0 for f in count_fields}
    for r in rows:
        for f in count_fields:
            totals[f] += getattr(r, f)
    return cls(player_id, None, **totals)


# ── loading ──────────────────────────────────────────────────────────────

def load_dataset(players: str | Path | IO[str],
                 batting: str | Path | IO[str],
                 bowling: str | Path | IO[str],
                 *, total_league_innings: int | None = None) -> Dataset:
    player_rows = _read_csv(players, "players.csv", PLAYERS_COLUMNS)
    batting_rows = _read_csv(batting, "batting.csv", BATTING_COLUMNS)
    bowling_rows = _read_csv(bowling, "bowling.csv", BOWLING_COLUMNS)

    metas: list[PlayerMeta] = []
    seen: set[str] = set()
    for i, row in enumerate(player_rows, start=1):
        pid = row["id"].strip()
        if pid in seen:
            raise DatasetError("players.csv row %d: duplicate player id %r" % (i, pid))
        seen.add(pid)
        try:
            metas.append(PlayerMeta(pid, row["name"].strip(),
                                    _to_bool("players.csv", i, "is_wicketkeeper", row["is_wicketkeeper"]),
                                    _to_bool("players.csv", i, "is_retired", row["is_retired"])))
        except ValueError as exc:
            raise DatasetError("players.csv row %d: %s" % (i, exc)) from None

    batting_records = _parse_records(batting_rows, "batting.csv", BattingRecord,
                                     COUNT_FIELDS_BATTING, seen)
    bowling_records = _parse_records(bowling_rows, "bowling.csv", BowlingRecord,
                                     COUNT_FIELDS_BOWLING, seen)

    seasons = [r.season for r in batting_records] + [r.season for r in bowling_records]
    current = max(seasons) if seasons else 0

    most_innings = 1
    for recs in (batting_records, bowling_records):
        per_player: dict[str, int] = {}
        for r in recs:
            per_player[r.player_id] = per_player.get(r.player_id, 0) + r.innings
        if per_player:
            most_innings = max(most_innings, max(per_player.values()))
    if total_league_innings is None:
        total_league_innings = most_innings
    elif total_league_innings < 1:
        raise DatasetError("total_league_innings must be at least 1, got %d"
                           % total_league_innings)

    return Dataset(tuple(metas), tuple(batting_records), tuple(bowling_records),
                   current, total_league_innings)


def load_dataset_dir(path: str | Path, **kwargs) -> Dataset:
    """Load players.csv, batting.csv and bowling.csv from one directory."""
    base = Path(path)
    return load_dataset(base / "players.csv", base / "batting.csv",
                        base / "bowling.csv", **kwargs)


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    """Write the dataset back to CSV; loading the result reproduces it exactly."""
    base = Path(path)
    base.mkdir(parents=True, exist_ok=True)
    with open(base / "players.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(PLAYERS_COLUMNS)
        for p in dataset.players:
            w.writerow([p.player_id, p.name,
                        "true" if p.is_wicketkeeper else "false",
                        "true" if p.is_retired else "false"])
    with open(base / "batting.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(BATTING_COLUMNS)
        for r in dataset.batting:
            w.writerow([r.player_id, r.season] + [getattr(r, f) for f in COUNT_FIELDS_BATTING])
    with open(base / "bowling.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(BOWLING_COLUMNS)
        for r in dataset.bowling:
            w.writerow([r.player_id, r.season] + [getattr(r, f) for f in COUNT_FIELDS_BOWLING])


def _read_csv(source, label, columns):
    if hasattr(source, "read"):
        return _read_rows(source, label, columns)
    with open(source, newline="", encoding="utf-8") as fh:
        return _read_rows(fh, label, columns)


def _read_rows(fh, label, columns):
    reader = csv.DictReader(fh)
    got = tuple(reader.fieldnames or ())
    if got != tuple(columns):
        raise DatasetError("%s: expected columns %s, got %s"
                           % (label, ",".join(columns), ",".join(got)))
    return list(reader)


def _parse_records(rows, label, cls, count_fields, known_ids):
    records = []
    seen: set[tuple[str, int]] = set()
    for i, row in enumerate(rows, start=1):
        pid = row["id"].strip()
        if pid not in known_ids:
            raise DatasetError("%s row %d: player id %r not present in players.csv"
                               % (label, i, pid))
        season = _to_int(label, i, "season", row["season"])
        if season <= 0:
            raise DatasetError("%s row %d: season must be a positive year, got %d"
                               % (label, i, season))
        if (pid, season) in seen:
            raise DatasetError("%s row %d: duplicate row for player %r season %d"
                               % (label, i, pid, season))
        seen.add((pid, season))
        counts = {f: _to_int(label, i, f, row[f]) for f in count_fields}
        try:
            records.append(cls(pid, season, **counts))
        except ValueError as exc:
            raise DatasetError("%s row %d: %s" % (label, i, exc)) from None
    return records


def _to_int(label, row, field, raw):
    try:
        return int((raw or "").strip())
    except (TypeError, ValueError):
        raise DatasetError("%s row %d: %s must be an integer, got %r"
                           % (label, row, field, raw)) from None


def _to_bool(label, row, field, raw):
    text = (raw or "").strip().lower()
    if text == "true":
        return True
    if text == "false":
        return False
    raise DatasetError("%s row %d: %s must be true or false, got %r"
                       % (label, row, field, raw))
