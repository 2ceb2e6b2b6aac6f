"""Local HTTP session API for the interactive mutation explorer.

Sessions live in memory (LRU, idle TTL); all algebra is computed
server-side so the browser only renders strings and integers.  Requests for
one session are serialized by a per-session lock; the store itself is a
single linearizable map.
"""

from __future__ import annotations

import os
import secrets
import threading
import time
from collections import OrderedDict

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .catalog import dynkin_catalog, parse_quiver_record
from .errors import CyclicOrientation, QuiverInputError
from .mutation import mutate_seed, seed_from_quiver
from .rootsys import Orientation

DEFAULT_CAPACITY = 256
DEFAULT_TTL_SECONDS = 3600.0


class Session:
    __slots__ = ("id", "cartan", "orientation", "root_seed", "seed", "history",
                 "lock", "created_at", "last_access")

    def __init__(self, sid, cartan, orientation, seed):
        self.id = sid
        self.cartan = cartan
        self.orientation = orientation
        self.root_seed = seed
        self.seed = seed
        self.history: list = []
        self.lock = threading.Lock()
        self.created_at = time.time()
        self.last_access = 0.0


class SessionStore:
    """LRU + idle-TTL map of live sessions; linearizable via one lock."""

    def __init__(
        self,
        capacity: int = DEFAULT_CAPACITY,
        ttl_seconds: float = DEFAULT_TTL_SECONDS,
        clock=time.monotonic,
        debug_replay: bool = False,
    ):
        self.capacity = capacity
        self.ttl = ttl_seconds
        self.clock = clock
        self.debug_replay = debug_replay
        self._lock = threading.Lock()
        self._sessions: OrderedDict = OrderedDict()

    def create(self, cartan, orientation) -> Session:
        sid = secrets.token_urlsafe(16)  # 128 bits
        session = Session(sid, cartan, orientation, seed_from_quiver(cartan, orientation))
        with self._lock:
            session.last_access = self.clock()
            self._sessions[sid] = session
            while len(self._sessions) > self.capacity:
                self._sessions.popitem(last=False)
        return session

    def get(self, sid: str) -> Session:
        with self._lock:
            session = self._sessions.get(sid)
            now = self.clock()
            if session is not None and now - session.last_access > self.ttl:
                del self._sessions[sid]
                session = None
            if session is None:
                raise KeyError(sid)
            session.last_access = now
            self._sessions.move_to_end(sid)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def _check_replay(session: Session) -> None:
    seed = session.root_seed
    for z in session.history:
        seed = mutate_seed(seed, z)
    if seed.vars != session.seed.vars or seed.matrix != session.seed.matrix:
        raise AssertionError("session state diverged from history replay")


def seed_view(session: Session, changed: int | None = None) -> dict:
    seed = session.seed
    sinks, sources = seed.matrix.sinks_and_sources()
    view = {
        "id": session.id,
        "vars": [v.to_json() for v in seed.vars],
        "matrix": [list(row) for row in seed.matrix.rows],
        "sinks": list(sinks),
        "sources": list(sources),
        "history": list(session.history),
    }
    if changed is not None:
        view["changed"] = [changed]
    return view


def create_app(
    store: SessionStore | None = None, static_dir: str | None = None
) -> FastAPI:
    app = FastAPI(title="clusterkit explorer", docs_url=None, redoc_url=None)
    if store is None:
        store = SessionStore()
    app.state.store = store

    async def read_json(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="body must be JSON")
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be a JSON object")
        return body

    def load_session(sid: str) -> Session:
        try:
            return store.get(sid)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session")

    @app.post("/session")
    async def create_session(request: Request):
        body = await read_json(request)
        try:
            cartan, orientation = parse_quiver_record(body)
        except QuiverInputError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        if not orientation.is_acyclic():
            raise HTTPException(
                status_code=422, detail="orientation contains an oriented cycle"
            )
        try:
            Orientation.checked(cartan, orientation.edges)
        except CyclicOrientation:
            raise HTTPException(
                status_code=422, detail="orientation contains an oriented cycle"
            )
        session = store.create(cartan, orientation)
        return JSONResponse(seed_view(session), status_code=201)

    @app.get("/session/{sid}")
    def get_session(sid: str):
        session = load_session(sid)
        with session.lock:
            return seed_view(session)

    @app.post("/session/{sid}/mutate")
    async def mutate_session(sid: str, request: Request):
        body = await read_json(request)
        k = body.get("k")
        session = load_session(sid)
        with session.lock:
            if not isinstance(k, int) or not 1 <= k <= session.seed.n:
                raise HTTPException(
                    status_code=400,
                    detail=f"k must be an integer in 1..{session.seed.n}",
                )
            session.seed = mutate_seed(session.seed, k)
            session.history.append(k)
            if store.debug_replay:
                _check_replay(session)
            return seed_view(session, changed=k)

    @app.post("/session/{sid}/undo")
    def undo(sid: str):
        session = load_session(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="history is empty")
            last = session.history.pop()
            # mutation is an involution: re-applying the last direction undoes it
            session.seed = mutate_seed(session.seed, last)
            trimmed = type(session.seed)(
                session.seed.vars, session.seed.matrix, session.seed.path[:-2]
            )
            session.seed = trimmed
            if store.debug_replay:
                _check_replay(session)
            return seed_view(session, changed=last)

    @app.get("/catalog/dynkin")
    def catalog():
        return {"templates": dynkin_catalog()}

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
