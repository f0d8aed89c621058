"""HTTP session API for playing against the engine.

In-memory sessions with TTL eviction; every mutation is serialized per
session.  The human plays the first player unless engine_first is set.
JSON state encodings follow the adapters in `engine`.
"""

from __future__ import annotations

import threading
import time
import uuid

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .engine import engine_move, make_game, winning_moves
from .errors import NibbleError, SizeLimit

SESSION_TTL_SECONDS = 3600.0


class CreateSession(BaseModel):
    family: str
    lam: list[int] | None = None
    mu: list[int] | None = None
    n: int | None = None
    lattice: dict | None = None
    engine_first: bool = False


class MoveRequest(BaseModel):
    move: object


class Session:
    def __init__(self, game, engine_first):
        self.id = uuid.uuid4().hex
        self.game = game
        self.state = game.start()
        self.engine_first = engine_first
        self.history = []
        self.status = "ongoing"
        self.turn = "engine" if engine_first else "human"
        self.touched = time.monotonic()
        self.lock = threading.Lock()

    def touch(self):
        self.touched = time.monotonic()

    def legal_moves_json(self):
        if self.status != "ongoing":
            return []
        return [mv for mv, _ in self.game.legal_moves(self.state)]

    def apply_engine_reply(self):
        """Engine moves if it is its turn; updates status afterwards."""
        if self.status != "ongoing" or self.turn != "engine":
            return None
        reply = engine_move(self.game, self.state)
        if reply is None:
            self.status = "human_won"  # engine cannot move
            return None
        move, nxt = reply
        self.state = nxt
        self.history.append({"by": "engine", "move": move})
        self.turn = "human"
        if not self.game.legal_moves(self.state):
            self.status = "engine_won"  # human is stuck
        return move

    def view(self, engine_reply=None):
        out = {
            "id": self.id,
            "state": self.game.state_json(self.state),
            "legal_moves": self.legal_moves_json(),
            "status": self.status,
            "turn": self.turn if self.status == "ongoing" else None,
            "history": list(self.history),
        }
        if engine_reply is not None:
            out["engine_reply"] = engine_reply
        return out


def create_app(ttl=SESSION_TTL_SECONDS):
    app = FastAPI(title="nibble game service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def evict_stale():
        now = time.monotonic()
        with registry_lock:
            stale = [sid for sid, s in sessions.items() if now - s.touched > ttl]
            for sid in stale:
                del sessions[sid]

    def get_session(sid) -> Session:
        evict_stale()
        with registry_lock:
            session = sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        session.touch()
        return session

    @app.post("/session")
    def create_session(req: CreateSession):
        evict_stale()
        params = {
            "lam": req.lam or [],
            "mu": req.mu or [],
            "n": req.n,
            "lattice": req.lattice,
        }
        try:
            game = make_game(req.family, params)
        except SizeLimit as exc:
            raise HTTPException(status_code=413, detail=str(exc))
        except (NibbleError, ValueError, KeyError, TypeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        session = Session(game, req.engine_first)
        if not session.game.legal_moves(session.state):
            # degenerate start: the mover is stuck immediately
            session.status = "engine_won" if session.turn == "human" else "human_won"
        engine_opening = session.apply_engine_reply()
        with registry_lock:
            sessions[session.id] = session
        return session.view(engine_reply=engine_opening)

    @app.post("/session/{sid}/move")
    def play_move(sid: str, req: MoveRequest):
        session = get_session(sid)
        with session.lock:
            if session.status != "ongoing":
                raise HTTPException(status_code=409, detail="session is finished")
            if session.turn != "human":
                raise HTTPException(status_code=409, detail="not your turn")
            legal = session.game.legal_moves(session.state)
            target = None
            for mv, nxt in legal:
                if mv == req.move:
                    target = nxt
                    break
            if target is None:
                raise HTTPException(
                    status_code=422,
                    detail={
                        "error": "illegal move",
                        "legal_moves": [mv for mv, _ in legal],
                    },
                )
            session.state = target
            session.history.append({"by": "human", "move": req.move})
            session.turn = "engine"
            if not session.game.legal_moves(session.state):
                session.status = "human_won"
                return session.view()
            reply = session.apply_engine_reply()
            return session.view(engine_reply=reply)

    @app.get("/session/{sid}")
    def session_view(sid: str):
        session = get_session(sid)
        return session.view()

    @app.get("/session/{sid}/hint")
    def session_hint(sid: str):
        session = get_session(sid)
        if session.status != "ongoing":
            return {"winning_moves": []}
        return {"winning_moves": winning_moves(session.game, session.state)}

    return app


app = create_app()
