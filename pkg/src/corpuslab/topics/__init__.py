from .effects import EffectEstimate, estimate_effect, prevalence_by
from .evaluation import KSearchRow, coherence, exclusivity, search_k
from .io import effects_to_csv, load_model, model_from_dict, model_to_dict, save_model
from .lda import GibbsLda, frex_scores, permute_topics, top_words

__all__ = [
    "EffectEstimate",
    "estimate_effect",
    "prevalence_by",
    "KSearchRow",
    "coherence",
    "exclusivity",
    "search_k",
    "effects_to_csv",
    "load_model",
    "model_from_dict",
    "model_to_dict",
    "save_model",
    "GibbsLda",
    "frex_scores",
    "permute_topics",
    "top_words",
]
