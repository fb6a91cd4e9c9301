"""Pipeline configuration.

One frozen dataclass drives every stage; its canonical-JSON hash is
stamped into persisted artifacts so caches invalidate when any knob
changes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, replace

from espace.errors import ConfigurationError
from espace.overview.archetypes import ARCHETYPE_NAMES

EMBEDDERS = ("reference",)
SUMMARIZERS = ("reference", "identity")
PARSERS = ("reference",)
WSD_ALGORITHMS = ("reference",)


@dataclass(frozen=True)
class PipelineConfig:
    namespace: str = "es"
    parser: str = "reference"
    embedder: str = "reference"
    summarizer: str = "reference"
    wsd: str = "reference"
    embedding_dim: int = 512
    context_weight: float = 0.5
    pertinence_threshold: float = 0.55
    fanout: int = 3
    summary_budget: int = 500
    abstract_budget: int = 200
    frequency_rank_cutoff: int = 1000
    archetype_order: tuple[str, ...] = field(default=ARCHETYPE_NAMES)
    fca_max_objects: int = 5000
    annotate_size_cap: int = 64 * 1024
    service_port: int = 8080
    lexicon_path: str | None = None  # None = bundled mini database
    frequency_path: str | None = None  # None = bundled table

    def __post_init__(self):
        if self.parser not in PARSERS:
            raise ConfigurationError(f"unknown parser {self.parser!r}")
        if self.embedder not in EMBEDDERS:
            raise ConfigurationError(f"unknown embedder {self.embedder!r}")
        if self.summarizer not in SUMMARIZERS:
            raise ConfigurationError(f"unknown summarizer {self.summarizer!r}")
        if self.wsd not in WSD_ALGORITHMS:
            raise ConfigurationError(f"unknown wsd {self.wsd!r}")
        if self.embedding_dim <= 0:
            raise ConfigurationError("embedding_dim must be positive")
        if not 0.0 <= self.context_weight <= 1.0:
            raise ConfigurationError("context_weight must lie in [0, 1]")
        if not 0.0 <= self.pertinence_threshold <= 1.0:
            raise ConfigurationError("pertinence_threshold must lie in [0, 1]")
        if self.fanout < 2:
            raise ConfigurationError("fanout must be at least 2")
        if self.summary_budget <= 0 or self.abstract_budget <= 0:
            raise ConfigurationError("summary budgets must be positive")
        if self.frequency_rank_cutoff <= 0:
            raise ConfigurationError("frequency_rank_cutoff must be positive")
        if sorted(self.archetype_order) != sorted(ARCHETYPE_NAMES):
            raise ConfigurationError(
                f"archetype_order must be a permutation of {ARCHETYPE_NAMES}"
            )
        if self.fca_max_objects <= 0:
            raise ConfigurationError("fca_max_objects must be positive")
        if self.annotate_size_cap <= 0:
            raise ConfigurationError("annotate_size_cap must be positive")
        if not 0 < self.service_port < 65536:
            raise ConfigurationError("service_port out of range")
        object.__setattr__(self, "archetype_order", tuple(self.archetype_order))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["archetype_order"] = list(self.archetype_order)
        return d

    def config_hash(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    @classmethod
    def from_dict(cls, d: dict) -> "PipelineConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")
        if "archetype_order" in d:
            d = dict(d, archetype_order=tuple(d["archetype_order"]))
        return cls(**d)

    def override(self, **kwargs) -> "PipelineConfig":
        return replace(self, **kwargs)
