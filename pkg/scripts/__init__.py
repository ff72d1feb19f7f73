from .canonical_studies import STUDIES, Study, run_studies

__all__ = [
    "Study",
    "STUDIES",
    "run_studies",
]
