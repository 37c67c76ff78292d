"""Executable strong functors, strong monads and their equivalent presentations
over finite categories."""

from . import (
    action,
    biaction,
    core,
    corpus,
    enrichment,
    errors,
    letlang,
    monoidal,
    powering,
    strength,
    strongmonad,
)
from .corpus import build
from .core import Report, Verdict

__version__ = "0.1.0"

__all__ = [
    "action", "biaction", "core", "corpus", "enrichment", "errors", "letlang", "monoidal",
    "powering", "strength", "strongmonad", "build", "Report", "Verdict", "__version__",
]
