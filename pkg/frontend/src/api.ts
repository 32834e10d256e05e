// Thin typed wrappers over the squad service HTTP API. Every mutation
// returns the server's authoritative plan so callers can reconcile.

export type BucketName =
  | "wicketkeeper"
  | "opener"
  | "middle"
  | "finisher"
  | "bowler";

export type ClusterName = "opener" | "middle" | "finisher" | "bowler";

export interface TeamConfig {
  size: number;
  value: number;
  buckets: Partial<Record<BucketName, number>>;
  keeper_rules?: {
    distinct_primary: boolean;
    required?: Record<string, ClusterName>;
  };
}

export interface PlanSlot {
  bucket: BucketName;
  position: number;
  player_id: string;
  name: string;
  credit: number;
}

export interface BucketFailure {
  bucket: BucketName;
  position: number;
  reason: string;
}

export interface PlanView {
  algorithm: string;
  config: TeamConfig;
  unit: number;
  caps: Record<string, number>;
  slots: PlanSlot[];
  spent: Record<string, number>;
  total_spent: number;
  failures: BucketFailure[];
}

export interface SessionSnapshot {
  id: string;
  algorithm: string;
  config: TeamConfig;
  plan: PlanView;
  unavailable: string[];
  events: number;
}

export interface Substitution {
  bucket: BucketName;
  position: number;
  removed: string;
  added: string;
  added_name: string;
  credit: number;
}

export interface MarkResult {
  changed: boolean;
  substitution: Substitution | null;
  refilled_bucket: BucketName | null;
  failure: BucketFailure | null;
}

export interface MarkResponse {
  result: MarkResult;
  plan: PlanView;
  unavailable: string[];
}

export interface SwapResponse {
  substitution: Substitution;
  plan: PlanView;
}

export interface RankingRow {
  cluster: ClusterName;
  rank: number;
  player_id: string;
  name: string;
  career_score: number;
  current_score: number;
  final_score: number;
  labels: string[];
  credit: number;
}

export interface Alternate {
  player_id: string;
  name: string;
  credit: number;
  primary: ClusterName;
  score: number;
}

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, init);
  if (!res.ok) {
    const body = await res.json().catch(() => null);
    const detail =
      body && typeof body.detail === "string" ? body.detail : res.statusText;
    throw new ApiError(res.status, detail);
  }
  return res.json() as Promise<T>;
}

function post<T>(base: string, path: string, payload: unknown): Promise<T> {
  return request<T>(base, path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  health(): Promise<{ status: string; players: number; current_season: number }> {
    return request(this.base, "/health");
  }

  rankings(cluster?: ClusterName): Promise<RankingRow[]> {
    const query = cluster ? `?cluster=${cluster}` : "";
    return request(this.base, `/rankings${query}`);
  }

  createSession(config: TeamConfig, algorithm: string): Promise<SessionSnapshot> {
    return post(this.base, "/sessions", { config, algorithm });
  }

  plan(sessionId: string): Promise<SessionSnapshot> {
    return request(this.base, `/sessions/${sessionId}/plan`);
  }

  markSold(sessionId: string, playerId: string): Promise<MarkResponse> {
    return post(this.base, `/sessions/${sessionId}/unavailable`, {
      player_id: playerId,
    });
  }

  alternates(sessionId: string, playerId: string, limit = 5): Promise<{
    player_id: string;
    alternates: Alternate[];
  }> {
    const query = `?player=${encodeURIComponent(playerId)}&limit=${limit}`;
    return request(this.base, `/sessions/${sessionId}/alternates${query}`);
  }

  swap(sessionId: string, playerId: string, replacementId: string): Promise<SwapResponse> {
    return post(this.base, `/sessions/${sessionId}/swap`, {
      player_id: playerId,
      replacement_id: replacementId,
    });
  }
}
