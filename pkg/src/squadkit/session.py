"""Live auction sessions over a fixed dataset.

A session starts from a team configuration, computes a plan, and then
absorbs auction events: a planned player getting sold elsewhere, or the
operator swapping a slot by hand. Every change is an event in an
append-only log; replaying the log rebuilds the session state exactly,
which is also how sessions are persisted (one JSONL file per session).

When a planned player becomes unavailable the slot refills with the
first alternate whose credit fits the bucket's freed budget. If no
alternate fits, the whole bucket is rebuilt from scratch; if even that
is infeasible the slot is dropped and recorded as a failure.
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable

from .credits import CreditConfig
from .selection import (Bucket, BucketFailure, InfeasibleError, PoolEntry,
                        Slot, TeamConfig, TeamPlan, bucket_constraint,
                        default_pools, greedy_fill_bucket,
                        recommend_alternates, select_team)
from .stats import Dataset


class SessionError(ValueError):
    """A session operation cannot be applied."""


class UnknownSessionError(SessionError):
    """No session with the given id."""


@dataclass(frozen=True)
class Substitution:
    bucket: Bucket
    position: int
    removed: str
    added: str
    added_name: str
    credit: int

    def as_dict(self) -> dict:
        return {"bucket": self.bucket.value, "position": self.position,
                "removed": self.removed, "added": self.added,
                "added_name": self.added_name, "credit": self.credit}


@dataclass(frozen=True)
class MarkResult:
    changed: bool
    substitution: Substitution | None = None
    refilled_bucket: Bucket | None = None
    failure: BucketFailure | None = None

    def as_dict(self) -> dict:
        return {
            "changed": self.changed,
            "substitution": self.substitution.as_dict() if self.substitution else None,
            "refilled_bucket": self.refilled_bucket.value if self.refilled_bucket else None,
            "failure": ({"bucket": self.failure.bucket.value,
                         "position": self.failure.position,
                         "reason": self.failure.reason}
                        if self.failure else None),
        }


class AuctionSession:
    """One auction in progress; mutate only through mark_unavailable/swap."""

    def __init__(self, session_id: str, dataset: Dataset, pools,
                 config: TeamConfig, algorithm: str,
                 sink: Callable[[dict], None] | None = None):
        self.id = session_id
        self.dataset = dataset
        self.pools = pools
        self.config = config
        self.algorithm = algorithm
        self.unavailable: set[str] = set()
        self.events: list[dict] = []
        self._sink = sink
        self.plan: TeamPlan = select_team(dataset, config, algorithm, pools=pools)

    def _append(self, event: dict) -> None:
        self.events.append(event)
        if self._sink is not None:
            self._sink(event)

    def mark_unavailable(self, player_id: str) -> MarkResult:
        """Record that a player went to another buyer. Marking the same
        player twice is a no-op and leaves the event log untouched."""
        self.dataset.player(player_id)
        if player_id in self.unavailable:
            return MarkResult(changed=False)
        result = self._apply_mark(player_id)
        self._append({"type": "unavailable", "player_id": player_id})
        return result

    def _apply_mark(self, player_id: str) -> MarkResult:
        self.unavailable.add(player_id)
        if player_id not in self.plan.player_ids():
            return MarkResult(changed=True)
        slot = self.plan.slot_of(player_id)
        budget = self.plan.remaining(slot.bucket) + slot.credit

        for alt in recommend_alternates(self.plan, player_id, self.pools,
                                        unavailable=frozenset(self.unavailable),
                                        limit=None):
            if alt.credit <= budget:
                self._replace_slot(slot, alt)
                sub = Substitution(slot.bucket, slot.position, player_id,
                                   alt.player_id, alt.name, alt.credit)
                return MarkResult(changed=True, substitution=sub)

        taken_elsewhere = {s.player_id for s in self.plan.slots
                           if s.bucket is not slot.bucket}
        blocked = frozenset(self.unavailable | taken_elsewhere)
        size = self.config.bucket_sizes.get(slot.bucket, 0)
        cap = self.plan.caps[slot.bucket]
        constraint = bucket_constraint(self.config, self.algorithm, slot.bucket)
        try:
            picks = greedy_fill_bucket(self.pools[slot.bucket], size, cap,
                                       unavailable=blocked, constraint=constraint)
        except InfeasibleError as exc:
            failure = BucketFailure(slot.bucket, slot.position, str(exc))
            kept = tuple(s for s in self.plan.slots if s.player_id != player_id)
            self.plan = replace(self.plan, slots=kept,
                                failures=self.plan.failures + (failure,))
            return MarkResult(changed=True, failure=failure)

        rebuilt = []
        inserted = False
        for s in self.plan.slots:
            if s.bucket is slot.bucket:
                if not inserted:
                    rebuilt.extend(Slot(slot.bucket, i, e.player_id, e.name, e.credit)
                                   for i, e in enumerate(picks, start=1))
                    inserted = True
            else:
                rebuilt.append(s)
        self.plan = replace(self.plan, slots=tuple(rebuilt))
        return MarkResult(changed=True, refilled_bucket=slot.bucket)

    def swap(self, player_id: str, replacement_id: str) -> Substitution:
        """Hand-pick a replacement for a planned player from the same
        bucket pool."""
        sub = self._apply_swap(player_id, replacement_id)
        self._append({"type": "swap", "player_id": player_id,
                      "replacement_id": replacement_id})
        return sub

    def _apply_swap(self, player_id: str, replacement_id: str) -> Substitution:
        try:
            slot = self.plan.slot_of(player_id)
        except ValueError as exc:
            raise SessionError(str(exc)) from None
        if replacement_id in self.plan.player_ids():
            raise SessionError("player %r is already in the plan" % replacement_id)
        if replacement_id in self.unavailable:
            raise SessionError("player %r was marked unavailable" % replacement_id)
        entry = self._pool_entry(slot.bucket, replacement_id)
        if entry is None:
            raise SessionError("player %r is not in the %s pool"
                               % (replacement_id, slot.bucket.value))
        budget = self.plan.remaining(slot.bucket) + slot.credit
        if entry.credit > budget:
            raise SessionError("credit %d for %r exceeds the %d left in bucket %s"
                               % (entry.credit, replacement_id, budget,
                                  slot.bucket.value))
        constraint = bucket_constraint(self.config, self.algorithm, slot.bucket)
        if constraint is not None:
            others = [self._pool_entry(slot.bucket, s.player_id)
                      for s in self.plan.bucket_slots(slot.bucket)
                      if s.position != slot.position]
            others = [o for o in others if o is not None]
            if not constraint(slot.position, entry, others):
                raise SessionError("player %r breaks the keeper rules for "
                                   "slot %d" % (replacement_id, slot.position))
        self._replace_slot(slot, entry)
        return Substitution(slot.bucket, slot.position, player_id,
                            entry.player_id, entry.name, entry.credit)

    def _pool_entry(self, bucket: Bucket, player_id: str) -> PoolEntry | None:
        for e in self.pools[bucket].entries:
            if e.player_id == player_id:
                return e
        return None

    def _replace_slot(self, slot: Slot, entry: PoolEntry) -> None:
        new_slot = Slot(slot.bucket, slot.position, entry.player_id,
                        entry.name, entry.credit)
        slots = tuple(new_slot if s is slot else s for s in self.plan.slots)
        self.plan = replace(self.plan, slots=slots)

    def alternates(self, player_id: str, limit: int = 5) -> list[PoolEntry]:
        return recommend_alternates(self.plan, player_id, self.pools,
                                    unavailable=frozenset(self.unavailable),
                                    limit=limit)

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "algorithm": self.algorithm,
            "config": self.config.as_dict(),
            "plan": self.plan.as_dict(),
            "unavailable": sorted(self.unavailable),
            "events": len(self.events),
        }


class SessionStore:
    """Creates, indexes and persists auction sessions.

    With a directory set, each session appends its events to
    <directory>/<session id>.jsonl and existing files are replayed on
    startup, so a restarted service carries on where it stopped.
    """

    def __init__(self, dataset: Dataset, directory: str | Path | None = None,
                 credit_config: CreditConfig | None = None):
        self.dataset = dataset
        self.pools = default_pools(dataset, credit_config)
        self.directory = Path(directory) if directory is not None else None
        self.sessions: dict[str, AuctionSession] = {}
        self._counter = 0
        self._lock = threading.Lock()
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)
            self._load_existing()

    def create(self, config: TeamConfig, algorithm: str = "v1") -> AuctionSession:
        with self._lock:
            session_id = "session-%d" % (self._counter + 1)
            # plan computation may raise; only a successful session takes the id
            session = AuctionSession(session_id, self.dataset, self.pools,
                                     config, algorithm)
            self._counter += 1
            session._sink = self._sink_for(session_id)
            session._append({"type": "created", "config": config.as_dict(),
                             "algorithm": algorithm})
            self.sessions[session_id] = session
            return session

    def get(self, session_id: str) -> AuctionSession:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise UnknownSessionError("no session %r" % session_id) from None

    def replay(self, events: list[dict], session_id: str = "replay",
               sink: Callable[[dict], None] | None = None) -> AuctionSession:
        """Rebuild a session from its event log."""
        if not events or events[0].get("type") != "created":
            raise SessionError("event log must start with a 'created' event")
        head = events[0]
        config = TeamConfig.from_dict(head["config"])
        session = AuctionSession(session_id, self.dataset, self.pools,
                                 config, head.get("algorithm", "v1"))
        session.events.append(head)
        for event in events[1:]:
            kind = event.get("type")
            if kind == "unavailable":
                session._apply_mark(event["player_id"])
            elif kind == "swap":
                session._apply_swap(event["player_id"], event["replacement_id"])
            else:
                raise SessionError("unknown event type %r" % kind)
            session.events.append(event)
        session._sink = sink
        return session

    def _sink_for(self, session_id: str) -> Callable[[dict], None] | None:
        if self.directory is None:
            return None
        path = self.directory / ("%s.jsonl" % session_id)

        def write(event: dict) -> None:
            with open(path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(event, sort_keys=True) + "\n")

        return write

    def _load_existing(self) -> None:
        for path in sorted(self.directory.glob("*.jsonl")):
            session_id = path.stem
            with open(path, encoding="utf-8") as fh:
                events = [json.loads(line) for line in fh if line.strip()]
            if not events:
                continue
            session = self.replay(events, session_id,
                                  sink=self._sink_for(session_id))
            self.sessions[session_id] = session
            match = re.fullmatch(r"session-(\d+)", session_id)
            if match:
                self._counter = max(self._counter, int(match.group(1)))
