// DOM rendering for the console. Everything re-renders from state;
// no incremental patching, the tables are small.

import type { Alternate, ClusterName } from "./api.js";
import type { Banner, ConsoleState } from "./state.js";
import { BUCKETS, boardRows, isConsistent, remainingByBucket } from "./state.js";

export interface Handlers {
  onMarkSold(playerId: string): void;
  onShowAlternates(playerId: string): void;
  onPickAlternate(planned: string, replacement: string): void;
}

const CLUSTERS: ClusterName[] = ["opener", "middle", "finisher", "bowler"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function bannerText(banner: Banner): string {
  switch (banner.kind) {
    case "substitution": {
      const delta =
        banner.creditDelta === 0
          ? "same credit"
          : banner.creditDelta > 0
            ? `+${banner.creditDelta} credits`
            : `${banner.creditDelta} credits`;
      return `${banner.removedName} → ${banner.addedName} (${delta}, ${banner.bucket})`;
    }
    case "refill":
      return `rebuilt the ${banner.bucket} bucket around the sale`;
    case "failure":
      return `${banner.bucket} slot lost: ${banner.reason}`;
    case "sold":
      return `${banner.playerId} sold elsewhere; the plan is unaffected`;
    case "error":
      return banner.message;
  }
}

export function renderBanner(root: HTMLElement, state: ConsoleState): void {
  root.innerHTML = "";
  if (!state.banner) {
    root.hidden = true;
    return;
  }
  root.hidden = false;
  const kind = state.banner.kind;
  root.appendChild(
    el("div", `banner banner-${kind}`, bannerText(state.banner)),
  );
}

export function renderBoard(root: HTMLElement, state: ConsoleState, handlers: Handlers): void {
  root.innerHTML = "";
  if (!state.plan) {
    root.appendChild(el("p", "empty", "No session yet. Create one above."));
    return;
  }
  if (!isConsistent(state)) {
    throw new Error("board would render a player both planned and sold");
  }

  const remaining = remainingByBucket(state.plan);
  const rows = boardRows(state);
  const failures = state.plan.failures;

  for (const bucket of BUCKETS) {
    const cap = state.plan.caps[bucket];
    if (cap === undefined) {
      continue;
    }
    const section = el("section", "bucket");
    section.dataset.bucket = bucket;
    const heading = el("h3", undefined, bucket);
    heading.appendChild(
      el("span", "budget", ` ${state.plan.spent[bucket] ?? 0}/${cap}, ${remaining[bucket]} left`),
    );
    section.appendChild(heading);

    const list = el("ul", "slots");
    for (const row of rows) {
      if (row.bucket !== bucket) {
        continue;
      }
      const item = el("li", row.pending ? "slot pending" : "slot");
      item.dataset.player = row.playerId;
      const label = row.keeperPrimary
        ? `${row.name} (${row.credit}, primary ${row.keeperPrimary})`
        : `${row.name} (${row.credit})`;
      item.appendChild(el("span", "who", label));

      const sold = el("button", "sold", "sold");
      sold.disabled = row.pending;
      sold.addEventListener("click", () => handlers.onMarkSold(row.playerId));
      item.appendChild(sold);

      const alts = el("button", "alts", "alternates");
      alts.addEventListener("click", () => handlers.onShowAlternates(row.playerId));
      item.appendChild(alts);
      list.appendChild(item);
    }
    for (const failure of failures) {
      if (failure.bucket !== bucket) {
        continue;
      }
      list.appendChild(
        el("li", "slot failed", `position ${failure.position} unfilled: ${failure.reason}`),
      );
    }
    section.appendChild(list);
    root.appendChild(section);
  }

  root.appendChild(
    el("p", "total", `total spent ${state.plan.total_spent} of ${state.plan.config.value}`),
  );
}

export function renderAlternates(
  root: HTMLElement,
  planned: string,
  options: Alternate[],
  handlers: Handlers,
): void {
  root.innerHTML = "";
  root.hidden = false;
  root.appendChild(el("h3", undefined, `stand-ins for ${planned}`));
  if (options.length === 0) {
    root.appendChild(el("p", "empty", "nobody close in credit is left"));
    return;
  }
  const list = el("ul", "alternates");
  for (const alt of options) {
    const item = el("li");
    const pick = el(
      "button",
      "pick",
      `${alt.name} (${alt.credit}, ${alt.primary})`,
    );
    pick.dataset.player = alt.player_id;
    pick.addEventListener("click", () => handlers.onPickAlternate(planned, alt.player_id));
    item.appendChild(pick);
    list.appendChild(item);
  }
  root.appendChild(list);
}

export function renderRankings(root: HTMLElement, state: ConsoleState): void {
  root.innerHTML = "";
  for (const cluster of CLUSTERS) {
    const rows = state.rankings[cluster];
    if (!rows || rows.length === 0) {
      continue;
    }
    const section = el("section", "cluster");
    section.appendChild(el("h3", undefined, cluster));
    const table = el("table");
    const head = el("tr");
    for (const title of ["#", "player", "final", "credit", "labels"]) {
      head.appendChild(el("th", undefined, title));
    }
    table.appendChild(head);
    for (const row of rows) {
      const tr = el("tr", state.unavailable.has(row.player_id) ? "gone" : undefined);
      tr.dataset.player = row.player_id;
      tr.appendChild(el("td", undefined, String(row.rank)));
      tr.appendChild(el("td", undefined, row.name));
      tr.appendChild(el("td", undefined, row.final_score.toFixed(2)));
      tr.appendChild(el("td", undefined, String(row.credit)));
      tr.appendChild(el("td", undefined, row.labels.join(" ")));
      table.appendChild(tr);
    }
    section.appendChild(table);
    root.appendChild(section);
  }
}
