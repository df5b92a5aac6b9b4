"""Published JSON schemas for every machine-readable artifact.

These are the contract for downstream consumers (explorer, scripts); the
test suite validates each emitted file against its schema.
"""

NONNEG_INT = {"type": "integer", "minimum": 0}
PROBABILITY = {"type": "number", "minimum": 0, "maximum": 1}

CORPUS_SCHEMA = {
    "type": "object",
    "required": ["format", "version", "documents"],
    "properties": {
        "format": {"const": "corpuslab-corpus"},
        "version": {"const": 1},
        "documents": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "sentences"],
                "properties": {
                    "id": {"type": "string", "pattern": r"^phase[12]_week\d+_[a-z]+_\d+[a-z]?$"},
                    "source": {"type": ["string", "null"]},
                    "sentences": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "items": {
                                "type": "array",
                                "minItems": 5,
                                "maxItems": 5,
                                "prefixItems": [
                                    {"type": "string"},
                                    {"type": "string"},
                                    {"type": "string"},
                                    {"type": ["integer", "null"], "minimum": 0},
                                    {"type": ["string", "null"]},
                                ],
                            },
                        },
                    },
                },
            },
        },
    },
}

MODEL_SCHEMA = {
    "type": "object",
    "required": ["format", "version", "config", "alpha", "beta", "vocabulary",
                 "doc_ids", "phi", "theta", "draws"],
    "properties": {
        "format": {"const": "corpuslab-model"},
        "version": {"const": 1},
        "config": {"type": "object"},
        "alpha": {"type": "number", "exclusiveMinimum": 0},
        "beta": {"type": "number", "exclusiveMinimum": 0},
        "vocabulary": {"type": "array", "items": {"type": "string"}},
        "word_counts": {"type": "array", "items": NONNEG_INT},
        "doc_ids": {"type": "array", "items": {"type": "string"}},
        "phi": {"type": "array", "items": {"type": "array", "items": PROBABILITY}},
        "theta": {"type": "array", "items": {"type": "array", "items": PROBABILITY}},
        "draws": {"type": "array"},
        "labels": {"type": ["array", "null"], "items": {"type": "string"}},
    },
}

TOP_WORDS_SCHEMA = {
    "type": "object",
    "required": ["topics"],
    "properties": {
        "topics": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["topic", "label", "words"],
                "properties": {
                    "topic": NONNEG_INT,
                    "label": {"type": "string"},
                    "words": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["lemma", "probability"],
                            "properties": {
                                "lemma": {"type": "string"},
                                "probability": PROBABILITY,
                            },
                        },
                    },
                },
            },
        }
    },
}

PROPORTIONS_SCHEMA = {
    "type": "object",
    "required": ["topics"],
    "properties": {
        "topics": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["topic", "label", "proportion"],
                "properties": {
                    "topic": NONNEG_INT,
                    "label": {"type": "string"},
                    "proportion": PROBABILITY,
                },
            },
        }
    },
}

WEEKLY_PREVALENCE_SCHEMA = {
    "type": "object",
    "required": ["weeks", "topics"],
    "properties": {
        "weeks": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "topics": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["topic", "label", "mean", "lo", "hi"],
                "properties": {
                    "topic": NONNEG_INT,
                    "label": {"type": "string"},
                    "mean": {"type": "array", "items": PROBABILITY},
                    "lo": {"type": "array", "items": PROBABILITY},
                    "hi": {"type": "array", "items": PROBABILITY},
                },
            },
        },
    },
}

SKETCH_GRAPH_SCHEMA = {
    "type": "object",
    "required": ["lemma", "relations"],
    "properties": {
        "lemma": {"type": "string"},
        "relations": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["collocate", "f_head", "f_coll", "f_pair",
                                 "logdice", "size"],
                    "properties": {
                        "collocate": {"type": "string"},
                        "f_head": {"type": "integer", "minimum": 1},
                        "f_coll": {"type": "integer", "minimum": 1},
                        "f_pair": {"type": "integer", "minimum": 1},
                        "logdice": {"type": "number", "maximum": 14},
                        "size": {"type": "number", "exclusiveMinimum": 0},
                    },
                },
            },
        },
    },
}

RUN_MANIFEST_SCHEMA = {
    "type": "object",
    "required": ["tool", "timestamp", "inputs", "config", "outputs"],
    "properties": {
        "tool": {
            "type": "object",
            "required": ["name", "version"],
            "properties": {"name": {"const": "corpuslab"}, "version": {"type": "string"}},
        },
        "timestamp": NONNEG_INT,
        "inputs": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["file", "sha256"],
                "properties": {
                    "file": {"type": "string"},
                    "sha256": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
                },
            },
        },
        "config": {"type": "object"},
        "outputs": {"type": "array", "items": {"type": "string"}},
    },
}

REPORT_FILE_SCHEMAS = {
    "top_words.json": TOP_WORDS_SCHEMA,
    "proportions.json": PROPORTIONS_SCHEMA,
    "weekly_prevalence.json": WEEKLY_PREVALENCE_SCHEMA,
    "run_manifest.json": RUN_MANIFEST_SCHEMA,
}
