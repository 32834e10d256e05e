// Bootstraps the console: session form, board, rankings, alternates.
// The session id lives in the URL hash so a reload rebuilds the same
// board from the server, and a slow poll keeps long-lived tabs fresh.

import { ApiClient, ApiError, type BucketName, type TeamConfig } from "./api.js";
import {
  applyMark,
  applySnapshot,
  applySwap,
  clearBanner,
  emptyState,
  markFailed,
  optimisticMark,
  setRankings,
  type ConsoleState,
} from "./state.js";
import { renderAlternates, renderBanner, renderBoard, renderRankings, type Handlers } from "./render.js";

const POLL_MS = 5000;

const api = new ApiClient("");
let state: ConsoleState = emptyState();

const boardRoot = must("board");
const bannerRoot = must("banner");
const rankingsRoot = must("rankings");
const alternatesRoot = must("alternates");
const formError = must("form-error");
const form = must("session-form") as HTMLFormElement;

function must(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node;
}

const handlers: Handlers = {
  onMarkSold(playerId) {
    void markSold(playerId);
  },
  onShowAlternates(playerId) {
    void showAlternates(playerId);
  },
  onPickAlternate(planned, replacement) {
    void pickAlternate(planned, replacement);
  },
};

function redraw(): void {
  renderBanner(bannerRoot, state);
  renderBoard(boardRoot, state, handlers);
  renderRankings(rankingsRoot, state);
}

function update(next: ConsoleState): void {
  state = next;
  redraw();
}

function configFromForm(data: FormData): TeamConfig {
  const buckets: Partial<Record<BucketName, number>> = {};
  for (const bucket of ["wicketkeeper", "opener", "middle", "finisher", "bowler"] as BucketName[]) {
    buckets[bucket] = Number(data.get(bucket) ?? 0);
  }
  return {
    size: Number(data.get("size")),
    value: Number(data.get("value")),
    buckets,
    keeper_rules: { distinct_primary: data.get("distinct_primary") === "on" },
  };
}

async function createSession(event: Event): Promise<void> {
  event.preventDefault();
  formError.textContent = "";
  const data = new FormData(form);
  const algorithm = String(data.get("algorithm") ?? "v1");
  try {
    const snap = await api.createSession(configFromForm(data), algorithm);
    window.location.hash = snap.id;
    alternatesRoot.hidden = true;
    update(applySnapshot(state, snap));
  } catch (err) {
    formError.textContent = err instanceof ApiError ? err.message : String(err);
  }
}

async function markSold(playerId: string): Promise<void> {
  const sessionId = state.sessionId;
  if (!sessionId) {
    return;
  }
  update(optimisticMark(state, playerId));
  try {
    const res = await api.markSold(sessionId, playerId);
    update(applyMark(state, playerId, res));
  } catch (err) {
    const message = err instanceof ApiError ? err.message : String(err);
    update(markFailed(state, playerId, message));
  }
}

async function showAlternates(playerId: string): Promise<void> {
  const sessionId = state.sessionId;
  if (!sessionId) {
    return;
  }
  try {
    const res = await api.alternates(sessionId, playerId);
    renderAlternates(alternatesRoot, playerId, res.alternates, handlers);
  } catch (err) {
    const message = err instanceof ApiError ? err.message : String(err);
    update({ ...clearBanner(state), banner: { kind: "error", message } });
  }
}

async function pickAlternate(planned: string, replacement: string): Promise<void> {
  const sessionId = state.sessionId;
  if (!sessionId) {
    return;
  }
  try {
    const res = await api.swap(sessionId, planned, replacement);
    alternatesRoot.hidden = true;
    update(applySwap(state, res));
  } catch (err) {
    const message = err instanceof ApiError ? err.message : String(err);
    update({ ...clearBanner(state), banner: { kind: "error", message } });
  }
}

async function reconcile(): Promise<void> {
  const sessionId = state.sessionId;
  if (!sessionId) {
    return;
  }
  try {
    const snap = await api.plan(sessionId);
    const banner = state.banner;
    update({ ...applySnapshot(state, snap), banner });
  } catch {
    // transient; the next poll retries
  }
}

async function boot(): Promise<void> {
  form.addEventListener("submit", createSession);
  try {
    const rows = await api.rankings();
    state = setRankings(state, rows);
  } catch (err) {
    formError.textContent = err instanceof ApiError ? err.message : String(err);
  }

  const fromHash = window.location.hash.replace(/^#/, "");
  if (fromHash) {
    try {
      const snap = await api.plan(fromHash);
      state = applySnapshot(state, snap);
    } catch {
      window.location.hash = "";
    }
  }
  redraw();
  window.setInterval(() => void reconcile(), POLL_MS);
}

void boot();
