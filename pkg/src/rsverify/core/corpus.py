"""Loading of case corpora from YAML files."""

import hashlib
import logging
from pathlib import Path
from typing import List, Optional, Tuple

import yaml
from pydantic import ValidationError

from ..models.cases import CaseSpec, CorpusFile
from ..models.reports import ReportDocument
from .errors import UsageError

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
DEFAULT_CORPUS = DATA_DIR / "default_corpus.yaml"


def resolve_corpus_path(name: str) -> Path:
    """``default`` names the packaged acceptance corpus; anything else is a path."""
    if name == "default":
        return DEFAULT_CORPUS
    return Path(name)


def load_corpus(name: str) -> Tuple[List[CaseSpec], str]:
    """
    Read and validate a corpus.

    Returns the cases with defaults applied and the SHA-256 digest of the file.
    Every case is validated before any is returned.
    """
    path = resolve_corpus_path(name)
    if not path.is_file():
        raise UsageError(f"Corpus file not found: {path}")
    raw = path.read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = yaml.safe_load(raw) or {}
    except yaml.YAMLError as e:
        raise UsageError(f"Corpus {path} is not valid YAML: {e}") from e
    try:
        corpus = CorpusFile.model_validate(data)
        cases = corpus.case_specs()
    except ValidationError as e:
        raise UsageError(f"Invalid corpus {path}: {e}") from e
    logger.info(f"Loaded {len(cases)} cases from {path}")
    return cases, digest


def load_baseline(path: Optional[str]) -> Optional[ReportDocument]:
    """A stored structured report, or None when no path is given."""
    if not path:
        return None
    baseline = Path(path)
    if not baseline.is_file():
        raise UsageError(f"Baseline report not found: {baseline}")
    try:
        return ReportDocument.model_validate_json(baseline.read_text())
    except ValidationError as e:
        raise UsageError(f"Invalid baseline report {baseline}: {e}") from e
