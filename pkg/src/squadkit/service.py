"""HTTP facade over rankings, credits and auction sessions.

The app is a factory so tests can build one per dataset. All request and
response bodies are plain JSON; domain validation errors map to 400 and
unknown ids to 404.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from .credits import CreditConfig, build_credit_table
from .ranking import BATTING_CLUSTERS, Cluster, assign_labels, rank_all
from .selection import SelectionError, TeamConfig
from .session import SessionError, SessionStore, UnknownSessionError
from .stats import Dataset, UnknownPlayerError


def create_app(dataset: Dataset, *,
               session_dir: str | Path | None = None,
               credit_config: CreditConfig | None = None,
               static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="squadkit", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    store = SessionStore(dataset, session_dir, credit_config)
    rankings = rank_all(dataset)
    labels = assign_labels(*(rankings[c] for c in BATTING_CLUSTERS))
    credit_table = build_credit_table(rankings, credit_config)
    app.state.store = store

    def ranking_rows(cluster: Cluster) -> list[dict]:
        rows = []
        for i, e in enumerate(rankings[cluster].entries, start=1):
            if cluster is Cluster.BOWLER:
                tags = [Cluster.BOWLER.value]
            else:
                tags = [c.value for c in labels[e.player_id].labels]
            rows.append({
                "cluster": cluster.value,
                "rank": i,
                "player_id": e.player_id,
                "name": e.name,
                "career_score": e.career_score,
                "current_score": e.current_score,
                "final_score": e.final_score,
                "labels": tags,
                "credit": credit_table.credit(cluster, e.player_id),
            })
        return rows

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "players": len(dataset.players),
                "current_season": dataset.current_season}

    @app.get("/players")
    def players(query: str = "") -> list[dict]:
        needle = query.strip().lower()
        out = []
        for p in dataset.players:
            if needle and needle not in p.player_id.lower() and needle not in p.name.lower():
                continue
            out.append({"player_id": p.player_id, "name": p.name,
                        "is_wicketkeeper": p.is_wicketkeeper,
                        "is_retired": p.is_retired})
        return out

    @app.get("/rankings")
    def get_rankings(cluster: str | None = None) -> list[dict]:
        if cluster is None:
            rows = []
            for c in (Cluster.OPENER, Cluster.MIDDLE, Cluster.FINISHER, Cluster.BOWLER):
                rows.extend(ranking_rows(c))
            return rows
        try:
            parsed = Cluster(cluster)
        except ValueError:
            raise HTTPException(400, "unknown cluster %r; expected one of %s"
                                % (cluster, ", ".join(c.value for c in Cluster))) from None
        return ranking_rows(parsed)

    @app.post("/sessions", status_code=201)
    def create_session(body: dict) -> dict:
        if not isinstance(body, dict) or "config" not in body:
            raise HTTPException(400, "body must be an object with a 'config' key")
        algorithm = body.get("algorithm", "v1")
        try:
            config = TeamConfig.from_dict(body["config"])
            session = store.create(config, algorithm)
        except (SelectionError, SessionError, ValueError) as exc:
            raise HTTPException(400, str(exc)) from None
        return session.snapshot()

    def _session(session_id: str):
        try:
            return store.get(session_id)
        except UnknownSessionError as exc:
            raise HTTPException(404, str(exc)) from None

    @app.get("/sessions/{session_id}/plan")
    def get_plan(session_id: str) -> dict:
        return _session(session_id).snapshot()

    @app.post("/sessions/{session_id}/unavailable")
    def mark_unavailable(session_id: str, body: dict) -> dict:
        session = _session(session_id)
        player_id = (body or {}).get("player_id")
        if not isinstance(player_id, str) or not player_id:
            raise HTTPException(400, "body must carry a 'player_id' string")
        try:
            result = session.mark_unavailable(player_id)
        except UnknownPlayerError as exc:
            raise HTTPException(404, str(exc)) from None
        return {"result": result.as_dict(), "plan": session.plan.as_dict(),
                "unavailable": sorted(session.unavailable)}

    @app.get("/sessions/{session_id}/alternates")
    def alternates(session_id: str, player: str, limit: int = 5) -> dict:
        session = _session(session_id)
        try:
            options = session.alternates(player, limit=limit)
        except ValueError as exc:
            raise HTTPException(404, str(exc)) from None
        return {"player_id": player,
                "alternates": [{"player_id": e.player_id, "name": e.name,
                                "credit": e.credit, "primary": e.primary.value,
                                "score": e.score} for e in options]}

    @app.post("/sessions/{session_id}/swap")
    def swap(session_id: str, body: dict) -> dict:
        session = _session(session_id)
        player_id = (body or {}).get("player_id")
        replacement_id = (body or {}).get("replacement_id")
        if not isinstance(player_id, str) or not isinstance(replacement_id, str):
            raise HTTPException(400, "body must carry 'player_id' and 'replacement_id'")
        try:
            sub = session.swap(player_id, replacement_id)
        except SessionError as exc:
            raise HTTPException(400, str(exc)) from None
        return {"substitution": sub.as_dict(), "plan": session.plan.as_dict()}

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True),
                  name="console")

    return app
