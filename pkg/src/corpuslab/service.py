"""Read-only HTTP query service.

All endpoints are GET and JSON; state (corpus, optional model, lexicons) is
loaded at startup and never mutated, so any number of concurrent requests can
share it. Errors use a consistent envelope::

    {"error": {"code": "...", "message": "..."}}

with 400 for malformed queries, 404 for named-but-unknown resources, and 422
for semantically invalid requests (e.g. dependency sketches on an untagged
corpus).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import payloads
from .colloc import DEFAULT_MAX_PER_RELATION, freq, sketch_diff, word_sketch
from .concord import kwic
from .corpus.model import Corpus, SubcorpusFilter, subcorpus
from .errors import (
    CorpusLabError,
    EmptySubcorpus,
    MissingModel,
    RelationsUnavailable,
)
from .metaphor import Lexicon, default_lexicons, flag_candidates
from .topics import estimate_effect, prevalence_by
from .topics.lda import GibbsLda


@dataclass
class ServiceState:
    corpus: Corpus
    model: GibbsLda | None = None
    lexicons: tuple[Lexicon, ...] = field(default_factory=default_lexicons)


class _HttpError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


def _error_body(code: str, message: str) -> dict:
    return {"error": {"code": code, "message": message}}


def _json(payload: dict, status: int = 200) -> Response:
    # one shared dumper keeps service bodies byte-identical to CLI --json
    return Response(
        content=payloads.dump_payload(payload),
        status_code=status,
        media_type="application/json",
    )


def _parse_filter(spec: str | None) -> SubcorpusFilter:
    if not spec:
        return SubcorpusFilter()
    try:
        return SubcorpusFilter.parse(spec)
    except ValueError as exc:
        raise _HttpError(400, "bad_filter", str(exc)) from exc


def _view(state: ServiceState, spec: str | None) -> Corpus:
    return subcorpus(state.corpus, _parse_filter(spec))


def _require_model(state: ServiceState) -> GibbsLda:
    if state.model is None:
        raise _HttpError(404, "no_model", "no topic model loaded")
    return state.model


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="corpuslab query service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )

    @app.exception_handler(_HttpError)
    async def handle_http_error(request: Request, exc: _HttpError):
        return _json(_error_body(exc.code, exc.message), exc.status)

    @app.exception_handler(CorpusLabError)
    async def handle_data_error(request: Request, exc: CorpusLabError):
        if isinstance(exc, (RelationsUnavailable, EmptySubcorpus)):
            status = 422
        elif isinstance(exc, MissingModel):
            status = 404
        else:
            status = 400
        return _json(_error_body(type(exc).__name__, str(exc)), status)

    @app.get("/health")
    def health():
        return _json({"status": "ok"})

    @app.get("/meta")
    def meta():
        return _json(payloads.meta_payload(state.corpus, state.model))

    @app.get("/freq")
    def freq_endpoint(lemma: str, filter: str | None = None):
        return _json(payloads.freq_payload(freq(_view(state, filter), lemma)))

    @app.get("/kwic")
    def kwic_endpoint(
        q: str,
        filter: str | None = None,
        page: int = 1,
        page_size: int = 50,
        sort: str = "position",
        width: int = 8,
    ):
        try:
            result = kwic(
                _view(state, filter), q, context_width=width, sort=sort,
                page=page, page_size=page_size,
            )
        except ValueError as exc:
            raise _HttpError(400, "bad_query", str(exc)) from exc
        return _json(payloads.kwic_payload(result))

    @app.get("/sketch")
    def sketch_endpoint(
        lemma: str,
        filter: str | None = None,
        min_score: float | None = None,
        max_per_rel: int = DEFAULT_MAX_PER_RELATION,
    ):
        view = _view(state, filter)
        if view.folded_count(lemma) == 0:
            raise _HttpError(404, "unknown_lemma", f"lemma {lemma!r} not in the view")
        sketch = word_sketch(view, lemma, max_per_relation=max_per_rel, min_score=min_score)
        return _json(payloads.sketch_payload(sketch))

    @app.get("/sketchdiff")
    def sketchdiff_endpoint(lemma: str, a: str, b: str):
        view_a = _view(state, a)
        view_b = _view(state, b)
        if view_a.folded_count(lemma) == 0 and view_b.folded_count(lemma) == 0:
            raise _HttpError(404, "unknown_lemma", f"lemma {lemma!r} not in either view")
        entries = sketch_diff(view_a, view_b, lemma)
        return _json(payloads.sketch_diff_payload(lemma.casefold(), entries, a, b))

    @app.get("/topics")
    def topics_endpoint():
        return _json(payloads.topics_payload(_require_model(state)))

    @app.get("/effects")
    def effects_endpoint(covariate: str = "phase"):
        if covariate not in ("phase", "week"):
            raise _HttpError(400, "bad_covariate", "covariate must be phase|week")
        model = _require_model(state)
        return _json(
            payloads.effects_payload(covariate, estimate_effect(model, state.corpus, covariate))
        )

    @app.get("/prevalence")
    def prevalence_endpoint(by: str = "phase"):
        if by not in ("phase", "week"):
            raise _HttpError(400, "bad_grouping", "by must be phase|week")
        model = _require_model(state)
        return _json(payloads.prevalence_payload(by, prevalence_by(model, state.corpus, by)))

    @app.get("/metaphors")
    def metaphors_endpoint(target: str, filter: str | None = None, scope: str = "sentence"):
        if scope not in ("sentence", "window"):
            raise _HttpError(400, "bad_scope", "scope must be sentence|window")
        targets = [t for t in target.split(",") if t]
        if not targets:
            raise _HttpError(400, "bad_target", "target must name at least one lemma")
        candidates = flag_candidates(
            _view(state, filter), targets, state.lexicons, scope=scope
        )
        return _json(payloads.metaphors_payload(candidates))

    return app


def serve(state: ServiceState, host: str = "127.0.0.1", port: int = 8765) -> None:
    """Run the service under uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(state), host=host, port=port, log_level="info")
