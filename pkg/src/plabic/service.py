"""Stateless JSON-over-HTTP service consumed by the explorer UI.

Every handler is a pure function of its request body; invalid documents get
a structured 400, violated preconditions a 422.  Responses always echo the
canonical form of whatever they return.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .collection import (
    MutationSite,
    WSCollection,
    apply_mutation,
    extend_to_maximal,
    mutation_sites,
    validate,
)
from .cyclic import Subset
from .documents import (
    collection_from_doc,
    collection_to_doc,
    necklace_from_doc,
    necklace_to_doc,
    permutation_from_doc,
    permutation_to_doc,
    tiling_to_doc,
)
from .errors import InvalidInputError, ParseError, WorkbenchError
from .positroid import decorated_to_necklace, necklace_to_decorated
from .tiling import build_tiling, embed_tiling


def _site_to_dict(site: MutationSite) -> dict:
    return {
        "S": list(site.S.members),
        "a": site.a,
        "b": site.b,
        "c": site.c,
        "d": site.d,
        "removes": list(site.removes.members),
        "adds": list(site.adds.members),
    }


def _site_from_dict(raw: dict, C: WSCollection) -> MutationSite:
    try:
        S = Subset.of(C.ground, raw["S"])
        return MutationSite(S, int(raw["a"]), int(raw["b"]), int(raw["c"]), int(raw["d"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad mutation site: {exc}", "site") from exc


def create_app() -> FastAPI:
    app = FastAPI(title="plabic workbench", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ParseError)
    async def parse_error(_: Request, exc: ParseError):
        return JSONResponse(
            status_code=400,
            content={"error": "invalid-document", "message": str(exc), "location": exc.location},
        )

    @app.exception_handler(InvalidInputError)
    async def precondition_error(_: Request, exc: InvalidInputError):
        return JSONResponse(
            status_code=422,
            content={"error": "precondition-failed", "message": str(exc)},
        )

    @app.exception_handler(WorkbenchError)
    async def workbench_error(_: Request, exc: WorkbenchError):
        return JSONResponse(
            status_code=422,
            content={"error": "operation-failed", "message": str(exc)},
        )

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/validate")
    async def validate_doc(request: Request) -> Any:
        body = await request.json()
        try:
            C = collection_from_doc(body, "collection")
        except ParseError as exc:
            return JSONResponse(
                status_code=400,
                content={
                    "error": "invalid-document",
                    "valid": False,
                    "message": str(exc),
                    "location": exc.location,
                },
            )
        report = validate(C, C.anchor)
        return {"valid": report.ok, "message": report.summary(),
                "collection": collection_to_doc(C)}

    @app.post("/maximalize")
    async def maximalize(request: Request) -> Any:
        C = collection_from_doc(await request.json(), "collection")
        if C.anchor is None:
            raise InvalidInputError("maximalize needs an anchored collection")
        return {"collection": collection_to_doc(extend_to_maximal(C))}

    @app.post("/mutations")
    async def mutations(request: Request) -> Any:
        C = collection_from_doc(await request.json(), "collection")
        return {"sites": [_site_to_dict(s) for s in mutation_sites(C)],
                "collection": collection_to_doc(C)}

    @app.post("/mutate")
    async def mutate(request: Request) -> Any:
        body = await request.json()
        if not isinstance(body, dict) or "collection" not in body or "site" not in body:
            raise ParseError("body must carry 'collection' and 'site'", "mutate")
        C = collection_from_doc(body["collection"], "collection")
        site = _site_from_dict(body["site"], C)
        mutated = apply_mutation(C, site)
        return {"collection": collection_to_doc(mutated)}

    @app.post("/tiling")
    async def tiling(request: Request) -> Any:
        C = collection_from_doc(await request.json(), "collection")
        embedded = embed_tiling(build_tiling(C))
        return tiling_to_doc(embedded)

    @app.post("/necklace")
    async def necklace(request: Request) -> Any:
        body = await request.json()
        if not isinstance(body, dict):
            raise ParseError("body must be an object", "necklace")
        if "permutation" in body:
            p = permutation_from_doc(body["permutation"])
            return {"necklace": necklace_to_doc(decorated_to_necklace(p))}
        if "necklace" in body:
            nk = necklace_from_doc(body["necklace"])
            return {"permutation": permutation_to_doc(necklace_to_decorated(nk))}
        raise ParseError("body must carry 'permutation' or 'necklace'", "necklace")

    return app
