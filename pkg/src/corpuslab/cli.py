"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data error. ``freq``, ``sketch`` and
``kwic`` accept ``--json`` to emit exactly the bytes the HTTP service would
return for the same query.

The default corpus file can come from the ``CORPUSLAB_CORPUS_DIR``
environment variable (``$CORPUSLAB_CORPUS_DIR/corpus.json``) when ``--corpus``
is omitted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__, payloads
from .colloc import (
    DEFAULT_MAX_PER_RELATION,
    DEFAULT_WINDOW,
    Relation,
    collocations,
    collocations_to_csv,
    freq,
    round_half_up,
    sketch_diff,
    word_sketch,
)
from .concord import TokenPattern, copular_pattern, kwic, kwic_to_tsv
from .corpus import (
    SubcorpusFilter,
    ingest_conllu,
    ingest_raw,
    load_corpus,
    load_stoplist,
    preprocess,
    read_manifest,
    save_corpus,
    subcorpus,
)
from .corpus.preprocess import PreprocessConfig
from .errors import CorpusLabError, UsageError
from .metaphor import (
    candidates_to_csv,
    default_lexicons,
    flag_candidates,
    load_lexicons,
    topic_domain_matrix,
)
from .report import DEFAULT_SKETCH_MIN_SCORE, emit_report
from .service import ServiceState, serve
from .topics import (
    GibbsLda,
    effects_to_csv,
    estimate_effect,
    load_model,
    prevalence_by,
    save_model,
    search_k,
)

ENV_CORPUS_DIR = "CORPUSLAB_CORPUS_DIR"


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 (not 2) on usage errors, per the CLI contract."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _corpus_path(args) -> Path:
    if args.corpus:
        return Path(args.corpus)
    base = os.environ.get(ENV_CORPUS_DIR)
    if base:
        return Path(base) / "corpus.json"
    raise UsageError("--corpus is required (or set CORPUSLAB_CORPUS_DIR)")


def _load_view(args):
    corpus = load_corpus(_corpus_path(args))
    spec = getattr(args, "filter", None)
    if spec:
        try:
            return subcorpus(corpus, SubcorpusFilter.parse(spec)), corpus
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return corpus, corpus


MODEL_DEFAULTS = {
    "k": 3, "alpha": None, "beta": 0.01,
    "iterations": 2000, "burnin": 1000, "thin": 50, "seed": 0,
}
_MODEL_CASTS = {
    "k": int, "alpha": float, "beta": float,
    "iterations": int, "burnin": int, "thin": int, "seed": int,
}


def _read_config(path: str) -> dict:
    """key=value lines; blank lines and # comments ignored."""
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{line_no}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in MODEL_DEFAULTS:
                raise UsageError(f"{path}:{line_no}: unknown config key {key!r}")
            try:
                values[key] = _MODEL_CASTS[key](value.strip())
            except ValueError:
                raise UsageError(f"{path}:{line_no}: bad value for {key}: {value!r}") from None
    return values


def _estimator(args) -> GibbsLda:
    """Model settings: command-line flag > config file > built-in default."""
    config = _read_config(args.config) if getattr(args, "config", None) else {}

    def pick(name):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        return config.get(name, MODEL_DEFAULTS[name])

    return GibbsLda(
        n_topics=pick("k"),
        alpha=pick("alpha"),
        beta=pick("beta"),
        iterations=pick("iterations"),
        burnin=pick("burnin"),
        thin=pick("thin"),
        seed=pick("seed"),
    )


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value file with model defaults")
    p.add_argument("--k", type=int, default=None, help="number of topics (default 3)")
    p.add_argument("--alpha", type=float, default=None, help="doc-topic prior (default 50/K)")
    p.add_argument("--beta", type=float, default=None, help="topic-word prior (default 0.01)")
    p.add_argument("--iterations", type=int, default=None, help="Gibbs sweeps (default 2000)")
    p.add_argument("--burnin", type=int, default=None, help="discarded sweeps (default 1000)")
    p.add_argument("--thin", type=int, default=None, help="draw stride (default 50)")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default 0)")


def _print_json(payload: dict) -> None:
    print(payloads.dump_payload(payload))


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def _timestamp() -> int:
    """Unix timestamp, honoring SOURCE_DATE_EPOCH for reproducible runs."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    return int(epoch) if epoch else int(time.time())


# --- subcommands -------------------------------------------------------------


def cmd_ingest(args) -> int:
    manifest = read_manifest(args.manifest) if args.manifest else None
    paths: list[Path] = []
    for entry in args.inputs:
        p = Path(entry)
        if p.is_dir():
            suffix = ".conllu" if args.format == "conllu" else ".txt"
            paths.extend(sorted(p.glob(f"*{suffix}")))
        else:
            paths.append(p)
    if not paths:
        raise UsageError("no input files")
    corpus = (ingest_conllu if args.format == "conllu" else ingest_raw)(paths, manifest)
    save_corpus(corpus, args.out)
    print(f"ingested {len(corpus.documents)} documents, {corpus.token_count} tokens -> {args.out}")
    return 0


def cmd_preprocess(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    stoplist = load_stoplist(args.stoplist) if args.stoplist else frozenset()
    cfg = PreprocessConfig(
        stoplist=stoplist,
        drop_punctuation=not args.keep_punctuation,
        drop_numbers=not args.keep_numbers,
        drop_hapax=not args.keep_hapax,
        lowercase=not args.no_lowercase,
        stem=args.stem,
    )
    cleaned = preprocess(corpus, cfg)
    save_corpus(cleaned, args.out)
    print(
        f"preprocessed: {len(cleaned.documents)} documents, {cleaned.token_count} tokens, "
        f"{len(cleaned.vocabulary)} types -> {args.out}"
    )
    return 0


def cmd_fit(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    model = _estimator(args).fit(corpus)
    if args.labels:
        model.labels_ = tuple(args.labels.split(","))
    save_model(model, args.out)
    print(f"fitted K={model.n_topics} on {len(corpus.documents)} documents -> {args.out}")
    return 0


def cmd_searchk(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    try:
        ks = [int(k) for k in args.ks.split(",") if k]
    except ValueError:
        raise UsageError(f"--ks must be a comma-separated integer list, got {args.ks!r}")
    rows = search_k(corpus, ks, _estimator(args))
    lines = ["k,held_out_log_lik,coherence,exclusivity"]
    for r in rows:
        lines.append(f"{r.k},{r.held_out_log_lik:.6g},{r.coherence:.6g},{r.exclusivity:.6g}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def cmd_effects(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    model = load_model(args.model)
    text = effects_to_csv(estimate_effect(model, corpus, args.covariate))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def cmd_prevalence(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    model = load_model(args.model)
    rows = prevalence_by(model, corpus, args.by)
    payload = payloads.prevalence_payload(args.by, rows)
    if args.out:
        Path(args.out).write_text(payloads.dump_payload(payload) + "\n", encoding="utf-8")
    else:
        _print_json(payload)
    return 0


def cmd_freq(args) -> int:
    view, _ = _load_view(args)
    report = freq(view, args.lemma)
    if args.json:
        _print_json(payloads.freq_payload(report))
    else:
        print(f"{report.hits} {report.pmw:.2f}")
    return 0


def cmd_colloc(args) -> int:
    view, _ = _load_view(args)
    stopwords = load_stoplist(args.stoplist) if args.stoplist else frozenset()
    rows = collocations(
        view,
        args.lemma,
        Relation(args.relation),
        min_pair=args.min_pair,
        window=args.window,
        stopwords=stopwords,
    )
    text = collocations_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def cmd_sketch(args) -> int:
    view, _ = _load_view(args)
    sketch = word_sketch(
        view, args.lemma, max_per_relation=args.max_per_rel, min_score=args.min_score
    )
    payload = payloads.sketch_payload(sketch)
    if args.out:
        Path(args.out).write_text(payloads.dump_payload(payload) + "\n", encoding="utf-8")
    elif args.json:
        _print_json(payload)
    else:
        for relation, collocs in payload["relations"].items():
            print(relation)
            for c in collocs:
                print(f"  {c['collocate']}\t{c['logdice']:.2f}\t{c['f_pair']}")
    return 0


def cmd_sketchdiff(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    try:
        view_a = subcorpus(corpus, SubcorpusFilter.parse(args.a))
        view_b = subcorpus(corpus, SubcorpusFilter.parse(args.b))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    entries = sketch_diff(view_a, view_b, args.lemma)
    payload = payloads.sketch_diff_payload(args.lemma.casefold(), entries, args.a, args.b)
    if args.json:
        _print_json(payload)
    else:
        for e in payload["entries"]:
            sa = "-" if e["score_a"] is None else f"{e['score_a']:.2f}"
            sb = "-" if e["score_b"] is None else f"{e['score_b']:.2f}"
            print(f"{e['relation']}\t{e['collocate']}\t{sa}\t{sb}")
    return 0


def cmd_kwic(args) -> int:
    view, _ = _load_view(args)
    query = TokenPattern.parse(args.query) if args.pattern else args.query
    page = kwic(
        view,
        query,
        by=args.by,
        context_width=args.width,
        sort=args.sort,
        page=args.page,
        page_size=args.page_size,
    )
    if args.json:
        _print_json(payloads.kwic_payload(page))
    elif args.tsv:
        Path(args.tsv).write_text(kwic_to_tsv(page.lines), encoding="utf-8")
    else:
        print(f"total {page.total}")
        for line in page.lines:
            print(f"{' '.join(line.left):>50} | {' '.join(line.node)} | {' '.join(line.right)}")
    return 0


def cmd_pattern(args) -> int:
    view, _ = _load_view(args)
    copulas = tuple(args.copulas.split(",")) if args.copulas else ("essere", "be")
    for lemma, count in copular_pattern(view, args.y, copulas=copulas):
        print(f"{lemma}\t{count}")
    return 0


def cmd_metaphors(args) -> int:
    view, corpus = _load_view(args)
    lexicons = load_lexicons(args.lexicons) if args.lexicons else default_lexicons()
    targets = [t for t in args.targets.split(",") if t]
    candidates = flag_candidates(
        view, targets, lexicons, scope=args.scope, window=args.window
    )
    if args.matrix:
        model = load_model(args.model) if args.model else None
        if model is None:
            raise UsageError("--matrix requires --model")
        matrix = topic_domain_matrix(candidates, model, corpus)
        _print_json(
            {
                "counts": {str(t): row for t, row in sorted(matrix.counts.items())},
                "pmw": {str(t): row for t, row in sorted(matrix.pmw.items())},
                "total": matrix.total,
            }
        )
        return 0
    text = candidates_to_csv(candidates)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def cmd_report(args) -> int:
    corpus_path = _corpus_path(args)
    corpus = load_corpus(corpus_path)
    model_path = Path(args.model)
    model = load_model(model_path)
    out_dir = Path(args.out)
    sketch_lemmas = tuple(s for s in (args.sketch_lemmas or "").split(",") if s)
    written = emit_report(
        model,
        corpus,
        out_dir,
        sketch_lemmas=sketch_lemmas,
        min_score=args.min_score,
        svg=args.svg,
    )
    manifest = {
        "tool": {"name": "corpuslab", "version": __version__},
        "timestamp": _timestamp(),
        "inputs": {
            "corpus": {"file": corpus_path.name, "sha256": _sha256(corpus_path)},
            "model": {"file": model_path.name, "sha256": _sha256(model_path)},
        },
        "config": {
            "seed": model.seed,
            "k": model.n_topics,
            "sketch_lemmas": list(sketch_lemmas),
            "min_score": args.min_score,
            "svg": args.svg,
        },
        "outputs": sorted(p.name for p in written),
    }
    (out_dir / "run_manifest.json").write_text(
        json.dumps(manifest, ensure_ascii=False, sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )
    print(f"report written to {out_dir} ({len(written)} files + run_manifest.json)")
    return 0


def cmd_serve(args) -> int:
    corpus = load_corpus(_corpus_path(args))
    model = load_model(args.model) if args.model else None
    lexicons = load_lexicons(args.lexicons) if args.lexicons else default_lexicons()
    serve(
        ServiceState(corpus=corpus, model=model, lexicons=lexicons),
        host=args.host,
        port=args.port,
    )
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corpuslab", description=__doc__)
    parser.add_argument("--version", action="version", version=f"corpuslab {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="subcommand")

    def add(name: str, func, help_text: str, corpus_flag: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if corpus_flag:
            p.add_argument("--corpus", help="corpus JSON (or $CORPUSLAB_CORPUS_DIR/corpus.json)")
        return p

    p = add("ingest", cmd_ingest, "ingest raw .txt or CoNLL-U files", corpus_flag=False)
    p.add_argument("inputs", nargs="+", help="files or directories")
    p.add_argument("--format", choices=("raw", "conllu"), default="raw")
    p.add_argument("--manifest", help="CSV manifest file,id,source")
    p.add_argument("--out", required=True)

    p = add("preprocess", cmd_preprocess, "clean a corpus for modeling")
    p.add_argument("--stoplist", help="one lemma per line")
    p.add_argument("--keep-punctuation", action="store_true")
    p.add_argument("--keep-numbers", action="store_true")
    p.add_argument("--keep-hapax", action="store_true")
    p.add_argument("--no-lowercase", action="store_true")
    p.add_argument("--stem", action="store_true", help=argparse.SUPPRESS)  # rejected downstream
    p.add_argument("--out", required=True)

    p = add("fit", cmd_fit, "fit the topic model")
    _add_model_flags(p)
    p.add_argument("--labels", help="comma-separated topic labels")
    p.add_argument("--out", required=True)

    p = add("searchk", cmd_searchk, "score candidate topic counts")
    _add_model_flags(p)
    p.add_argument("--ks", required=True, help="comma-separated K values")
    p.add_argument("--out")

    p = add("effects", cmd_effects, "regress prevalence on a covariate")
    p.add_argument("--model", required=True)
    p.add_argument("--covariate", choices=("phase", "week"), default="phase")
    p.add_argument("--out")

    p = add("prevalence", cmd_prevalence, "mean topic proportions per group")
    p.add_argument("--model", required=True)
    p.add_argument("--by", choices=("phase", "week"), default="phase")
    p.add_argument("--out")

    p = add("freq", cmd_freq, "lemma frequency and pmw")
    p.add_argument("--lemma", required=True)
    p.add_argument("--filter", help="phase=..|week=A-B|month=..")
    p.add_argument("--json", action="store_true")

    p = add("colloc", cmd_colloc, "ranked collocations for one relation")
    p.add_argument("--lemma", required=True)
    p.add_argument("--relation", choices=[r.value for r in Relation], default="window")
    p.add_argument("--min-pair", type=int, default=1)
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--stoplist", help="exclude these lemmas as window collocates")
    p.add_argument("--filter")
    p.add_argument("--out")

    p = add("sketch", cmd_sketch, "word sketch (per-relation collocates)")
    p.add_argument("--lemma", required=True)
    p.add_argument("--max-per-rel", type=int, default=DEFAULT_MAX_PER_RELATION)
    p.add_argument("--min-score", type=float, default=None)
    p.add_argument("--filter")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = add("sketchdiff", cmd_sketchdiff, "contrast sketches across two subcorpora")
    p.add_argument("--lemma", required=True)
    p.add_argument("--a", required=True, help="filter for subcorpus A")
    p.add_argument("--b", required=True, help="filter for subcorpus B")
    p.add_argument("--json", action="store_true")

    p = add("kwic", cmd_kwic, "concordance search")
    p.add_argument("--query", required=True)
    p.add_argument("--by", choices=("lemma", "surface"), default="lemma")
    p.add_argument("--pattern", action="store_true",
                   help='treat --query as slot pattern [lemma="..." pos="..."]')
    p.add_argument("--width", type=int, default=8)
    p.add_argument("--sort", choices=("position", "left", "right"), default="position")
    p.add_argument("--page", type=int, default=1)
    p.add_argument("--page-size", type=int, default=50)
    p.add_argument("--filter")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", help="write TSV to this path")

    p = add("pattern", cmd_pattern, 'extract X from "X is (a) Y"')
    p.add_argument("--y", required=True, help="the Y lemma, e.g. tsunami")
    p.add_argument("--copulas", help="comma-separated copula lemmas "
                                     "(untagged corpora need inflected forms, e.g. è)")
    p.add_argument("--filter")

    p = add("metaphors", cmd_metaphors, "flag metaphor candidates")
    p.add_argument("--targets", required=True, help="comma-separated target lemmas")
    p.add_argument("--lexicons", help="JSON {domain: [lemmas]} pack")
    p.add_argument("--scope", choices=("sentence", "window"), default="sentence")
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--matrix", action="store_true", help="emit topic x domain matrix")
    p.add_argument("--model", help="model for --matrix attribution")
    p.add_argument("--filter")
    p.add_argument("--out")

    p = add("report", cmd_report, "emit figure-data files + run manifest")
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True, help="run directory")
    p.add_argument("--sketch-lemmas", help="comma-separated sketch headwords")
    p.add_argument("--min-score", type=float, default=DEFAULT_SKETCH_MIN_SCORE)
    p.add_argument("--svg", action="store_true")

    p = add("serve", cmd_serve, "run the read-only HTTP query service")
    p.add_argument("--model")
    p.add_argument("--lexicons")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_help(sys.stderr)
        return 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"corpuslab: error: {exc}", file=sys.stderr)
        return 1
    except CorpusLabError as exc:
        print(f"corpuslab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
