"""Knowledge-base serialization (JSON document, schema ``bpr-kb-1``)."""

import json
import logging
from collections import defaultdict
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import aiofiles
from pydantic import BaseModel, Field, ValidationError

from ..core.belief import Belief
from ..core.knowledge import KnowledgeBase, PolicyInfo, TypeInfo
from ..exceptions import BPRError, KnowledgeBaseIOError, SchemaVersionMismatchError
from ..records import SignalKind, StorageReport
from .families import model_from_dict

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "bpr-kb-1"
_SEPARATORS = (",", ":")


class TypeEntry(BaseModel):
    """Serialized type."""

    label: str = Field(..., description="Type label")
    task: float = Field(..., description="Task the type was trained on")


class PolicyEntry(BaseModel):
    """Serialized library policy."""

    index: int = Field(..., description="Policy index in the domain")
    name: str = Field(..., description="Policy name")


class ModelEntry(BaseModel):
    """Serialized models of one (type, policy) pair."""

    perf: Dict[str, Any] = Field(..., description="Performance model")
    obs: Optional[Dict[str, Any]] = Field(
        None, description="Observation model (absent when shared with perf)"
    )


class KnowledgeBaseDocument(BaseModel):
    """Top-level knowledge-base document."""

    schema_version: str = Field(..., description="Document schema version")
    domain: str = Field(..., description="Domain the models were trained on")
    signal_kind: SignalKind = Field(..., description="Signal kind of the observation models")
    utility_range: Tuple[float, float] = Field(..., description="(U_min, U_max) of the domain")
    types: List[TypeEntry] = Field(default_factory=list, description="Known types")
    policies: List[PolicyEntry] = Field(default_factory=list, description="Library policies")
    prior: List[float] = Field(default_factory=list, description="Prior over types")
    models: List[List[ModelEntry]] = Field(
        default_factory=list, description="Models indexed [type][policy]"
    )


def _document(kb: KnowledgeBase, with_models: bool = True) -> KnowledgeBaseDocument:
    models = []
    if with_models:
        for perf_row, obs_row in zip(kb.perf, kb.obs):
            models.append(
                [
                    ModelEntry(perf=p.to_dict(), obs=None if kb.shares_models else o.to_dict())
                    for p, o in zip(perf_row, obs_row)
                ]
            )
    return KnowledgeBaseDocument(
        schema_version=SCHEMA_VERSION,
        domain=kb.domain,
        signal_kind=kb.signal_kind,
        utility_range=kb.utility_range,
        types=[TypeEntry(label=t.label, task=t.task) for t in kb.types],
        policies=[PolicyEntry(index=p.index, name=p.name) for p in kb.policies],
        prior=[float(w) for w in kb.prior.weights],
        models=models,
    )


def _dumps(data: Any) -> str:
    return json.dumps(data, separators=_SEPARATORS)


def dump_kb(kb: KnowledgeBase) -> str:
    """Serialize a knowledge base; floats use the shortest round-trip form."""
    return _dumps(_document(kb).model_dump(mode="json"))


def parse_kb(text: str, path: str = "<memory>") -> KnowledgeBase:
    """
    Rebuild a knowledge base from its JSON document.

    Args:
        text: Document text
        path: Source path for error messages

    Returns:
        Knowledge base

    Raises:
        SchemaVersionMismatchError: If the document is corrupt or has another schema
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaVersionMismatchError(path, None, f"not valid JSON ({e})") from e
    found = raw.get("schema_version") if isinstance(raw, dict) else None
    if found != SCHEMA_VERSION:
        raise SchemaVersionMismatchError(path, found, f"expected '{SCHEMA_VERSION}'")

    try:
        doc = KnowledgeBaseDocument.model_validate(raw)
        perf_rows, obs_rows = [], []
        for row in doc.models:
            perf_row, obs_row = [], []
            for entry in row:
                perf = model_from_dict(entry.perf)
                perf_row.append(perf)
                obs_row.append(perf if entry.obs is None else model_from_dict(entry.obs))
            perf_rows.append(tuple(perf_row))
            obs_rows.append(tuple(obs_row))
        return KnowledgeBase(
            domain=doc.domain,
            signal_kind=doc.signal_kind,
            types=tuple(TypeInfo(t.label, t.task) for t in doc.types),
            policies=tuple(PolicyInfo(p.index, p.name) for p in doc.policies),
            perf=tuple(perf_rows),
            obs=tuple(obs_rows),
            prior=Belief(doc.prior),
            utility_range=doc.utility_range,
        )
    except (ValidationError, KeyError, TypeError, ValueError, BPRError) as e:
        raise SchemaVersionMismatchError(path, found, str(e)) from e


def save_kb(kb: KnowledgeBase, path: str | Path) -> None:
    """
    Write a knowledge base to a file.

    Raises:
        KnowledgeBaseIOError: If the file cannot be written
    """
    try:
        Path(path).write_text(dump_kb(kb), encoding="utf-8")
    except OSError as e:
        raise KnowledgeBaseIOError(str(path), str(e)) from e
    logger.info(f"Knowledge base saved to {path}")


def load_kb(path: str | Path) -> KnowledgeBase:
    """
    Read a knowledge base from a file.

    Raises:
        KnowledgeBaseIOError: If the file cannot be read
        SchemaVersionMismatchError: If the document is corrupt or has another schema
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise KnowledgeBaseIOError(str(path), str(e)) from e
    return parse_kb(text, str(path))


async def write_kb(kb: KnowledgeBase, path: str | Path) -> None:
    """Async variant of :func:`save_kb`."""
    try:
        async with aiofiles.open(path, "w", encoding="utf-8") as f:
            await f.write(dump_kb(kb))
    except OSError as e:
        raise KnowledgeBaseIOError(str(path), str(e)) from e
    logger.info(f"Knowledge base saved to {path}")


async def read_kb(path: str | Path) -> KnowledgeBase:
    """Async variant of :func:`load_kb`."""
    try:
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            text = await f.read()
    except OSError as e:
        raise KnowledgeBaseIOError(str(path), str(e)) from e
    return parse_kb(text, str(path))


def storage_size(kb: KnowledgeBase) -> StorageReport:
    """
    Serialized size of the models, per family.

    The header is the document without any model. Trace catalogues are not
    counted. When the episodic return is the signal the performance models
    are the observation models and only the latter are reported.
    """
    header = len(_dumps(_document(kb, with_models=False).model_dump(mode="json")))
    observation: Dict[str, int] = defaultdict(int)
    performance: Dict[str, int] = defaultdict(int)
    for perf_row, obs_row in zip(kb.perf, kb.obs):
        for p, o in zip(perf_row, obs_row):
            observation[o.family] += len(_dumps(o.parameters()))
            if not kb.shares_models:
                performance[p.family] += len(_dumps(p.parameters()))
    return StorageReport(
        header=header, observation=dict(observation), performance=dict(performance)
    )
