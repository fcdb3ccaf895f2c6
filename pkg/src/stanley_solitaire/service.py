"""HTTP JSON API over the counting engine, plus static hosting for the
explorer UI.

Counts travel as decimal strings (they outgrow JSON's numbers quickly).
All handlers are stateless reads over one shared memo cache; errors come
back as {"error": "<message>"} with a 4xx status.
"""

from __future__ import annotations

import os
import random

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .counting import MemoCache, count_plays, sample_play
from .formulas import parse_partition, yfm
from .positions import legal_moves, parse_position, total_candies


class MoveOption(BaseModel):
    index: int
    position: list[int]
    count: str


class PositionReport(BaseModel):
    position: list[int]
    total: int
    count: str
    moves: list[MoveOption]


class FormulaValue(BaseModel):
    value: str


class SampledPlay(BaseModel):
    play: list[list[int]]


def default_static_dir() -> str | None:
    """The built UI, when present: $STANLEY_SOLITAIRE_UI or ./frontend/dist."""
    candidates = [os.environ.get("STANLEY_SOLITAIRE_UI"), os.path.join("frontend", "dist")]
    for candidate in candidates:
        if candidate and os.path.isdir(candidate):
            return candidate
    return None


def create_app(static_dir: str | None = None, cache_cap: int | None = None) -> FastAPI:
    cache = MemoCache(max_entries=cache_cap)
    app = FastAPI(title="Stanley solitaire explorer", docs_url="/api/docs", openapi_url="/api/openapi.json")

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse({"error": str(exc.errors()[0]["msg"])}, status_code=400)

    @app.exception_handler(RuntimeError)
    async def runtime_error(request: Request, exc: RuntimeError) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=500)

    @app.exception_handler(ArithmeticError)
    async def arithmetic_error(request: Request, exc: ArithmeticError) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=500)

    @app.get("/api/position", response_model=PositionReport)
    def position_report(pos: str) -> PositionReport:
        p = parse_position(pos)
        count = count_plays(p, cache)
        options = [
            MoveOption(index=i, position=list(child), count=str(count_plays(child, cache)))
            for i, child in legal_moves(p)
        ]
        if p and sum(int(o.count) for o in options) != count:
            raise RuntimeError(f"child counts do not sum to the parent count for {list(p)}")
        return PositionReport(
            position=list(p), total=total_candies(p), count=str(count), moves=options
        )

    @app.get("/api/yfm", response_model=FormulaValue)
    def yfm_value(shape: str) -> FormulaValue:
        return FormulaValue(value=str(yfm(parse_partition(shape))))

    @app.get("/api/sample", response_model=SampledPlay)
    def sample(pos: str, seed: int | None = None) -> SampledPlay:
        rng = random.Random(seed)
        play = sample_play(parse_position(pos), rng, cache)
        return SampledPlay(play=[list(q) for q in play])

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


app = create_app(static_dir=default_static_dir())
