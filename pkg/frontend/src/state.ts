// Console state and pure reducers. The server plan is authoritative:
// mutations render an optimistic strike-through first, then the
// acknowledged response replaces the whole plan, so the board always
// converges to server state and a player is never shown both planned
// and sold.

import type {
  BucketName,
  ClusterName,
  MarkResponse,
  PlanSlot,
  PlanView,
  RankingRow,
  SessionSnapshot,
  SwapResponse,
} from "./api.js";

export type Banner =
  | { kind: "substitution"; removed: string; removedName: string; added: string; addedName: string; creditDelta: number; bucket: BucketName }
  | { kind: "refill"; bucket: BucketName }
  | { kind: "failure"; bucket: BucketName; reason: string }
  | { kind: "sold"; playerId: string }
  | { kind: "error"; message: string };

export interface ConsoleState {
  sessionId: string | null;
  algorithm: string;
  plan: PlanView | null;
  rankings: Partial<Record<ClusterName, RankingRow[]>>;
  unavailable: ReadonlySet<string>;
  pending: ReadonlySet<string>;
  banner: Banner | null;
}

export interface BoardRow {
  bucket: BucketName;
  position: number;
  playerId: string;
  name: string;
  credit: number;
  pending: boolean;
  keeperPrimary: ClusterName | null;
}

export const BUCKETS: BucketName[] = [
  "wicketkeeper",
  "opener",
  "middle",
  "finisher",
  "bowler",
];

const BATTING: ClusterName[] = ["opener", "middle", "finisher"];

export function emptyState(): ConsoleState {
  return {
    sessionId: null,
    algorithm: "v1",
    plan: null,
    rankings: {},
    unavailable: new Set(),
    pending: new Set(),
    banner: null,
  };
}

export function applySnapshot(state: ConsoleState, snap: SessionSnapshot): ConsoleState {
  return {
    ...state,
    sessionId: snap.id,
    algorithm: snap.algorithm,
    plan: snap.plan,
    unavailable: new Set(snap.unavailable),
    pending: new Set(),
    banner: null,
  };
}

export function setRankings(state: ConsoleState, rows: RankingRow[]): ConsoleState {
  const rankings: Partial<Record<ClusterName, RankingRow[]>> = {};
  for (const row of rows) {
    (rankings[row.cluster] ??= []).push(row);
  }
  return { ...state, rankings };
}

export function optimisticMark(state: ConsoleState, playerId: string): ConsoleState {
  const pending = new Set(state.pending);
  pending.add(playerId);
  return { ...state, pending };
}

export function applyMark(state: ConsoleState, playerId: string, res: MarkResponse): ConsoleState {
  const pending = new Set(state.pending);
  pending.delete(playerId);
  const previous = state.plan ? slotOf(state.plan, playerId) : null;

  let banner: Banner | null = null;
  const r = res.result;
  if (r.substitution) {
    banner = {
      kind: "substitution",
      removed: r.substitution.removed,
      removedName: previous ? previous.name : r.substitution.removed,
      added: r.substitution.added,
      addedName: r.substitution.added_name,
      creditDelta: r.substitution.credit - (previous ? previous.credit : 0),
      bucket: r.substitution.bucket,
    };
  } else if (r.failure) {
    banner = { kind: "failure", bucket: r.failure.bucket, reason: r.failure.reason };
  } else if (r.refilled_bucket) {
    banner = { kind: "refill", bucket: r.refilled_bucket };
  } else if (r.changed) {
    banner = { kind: "sold", playerId };
  }

  return {
    ...state,
    plan: res.plan,
    unavailable: new Set(res.unavailable),
    pending,
    banner,
  };
}

export function applySwap(state: ConsoleState, res: SwapResponse): ConsoleState {
  const previous = state.plan ? slotOf(state.plan, res.substitution.removed) : null;
  return {
    ...state,
    plan: res.plan,
    banner: {
      kind: "substitution",
      removed: res.substitution.removed,
      removedName: previous ? previous.name : res.substitution.removed,
      added: res.substitution.added,
      addedName: res.substitution.added_name,
      creditDelta: res.substitution.credit - (previous ? previous.credit : 0),
      bucket: res.substitution.bucket,
    },
  };
}

export function markFailed(state: ConsoleState, playerId: string, message: string): ConsoleState {
  const pending = new Set(state.pending);
  pending.delete(playerId);
  return { ...state, pending, banner: { kind: "error", message } };
}

export function clearBanner(state: ConsoleState): ConsoleState {
  return { ...state, banner: null };
}

export function slotOf(plan: PlanView, playerId: string): PlanSlot | null {
  return plan.slots.find((s) => s.player_id === playerId) ?? null;
}

export function remainingByBucket(plan: PlanView): Record<string, number> {
  const out: Record<string, number> = {};
  for (const [bucket, cap] of Object.entries(plan.caps)) {
    out[bucket] = cap - (plan.spent[bucket] ?? 0);
  }
  return out;
}

// primary batting role: best final score, earlier role on a tie
export function primaryOf(
  rankings: Partial<Record<ClusterName, RankingRow[]>>,
  playerId: string,
): ClusterName | null {
  let best: ClusterName | null = null;
  let bestScore = -Infinity;
  for (const cluster of BATTING) {
    const row = rankings[cluster]?.find((r) => r.player_id === playerId);
    if (row && row.final_score > bestScore) {
      best = cluster;
      bestScore = row.final_score;
    }
  }
  return best;
}

export function boardRows(state: ConsoleState): BoardRow[] {
  if (!state.plan) {
    return [];
  }
  const rows: BoardRow[] = [];
  for (const bucket of BUCKETS) {
    for (const slot of state.plan.slots) {
      if (slot.bucket !== bucket) {
        continue;
      }
      rows.push({
        bucket,
        position: slot.position,
        playerId: slot.player_id,
        name: slot.name,
        credit: slot.credit,
        pending: state.pending.has(slot.player_id),
        keeperPrimary:
          bucket === "wicketkeeper"
            ? primaryOf(state.rankings, slot.player_id)
            : null,
      });
    }
  }
  return rows;
}

// a planned player may appear in the sold set only while its mark is
// still in flight; acknowledged state never shows both
export function isConsistent(state: ConsoleState): boolean {
  if (!state.plan) {
    return true;
  }
  return state.plan.slots.every(
    (s) => !state.unavailable.has(s.player_id) || state.pending.has(s.player_id),
  );
}
