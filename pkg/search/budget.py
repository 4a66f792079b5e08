from dataclasses import dataclass, field
from typing import Optional

from core import FenceDiagram
from core.errors import RangeError
from moves import MoveInstance


@dataclass(frozen=True)
class SearchBudget:
    max_steps:   int = 6
    max_strands: int = 6
    max_bands:   int = 8
    max_visited: int = 10**6

    def __post_init__(self):
        for name in ("max_steps", "max_strands", "max_bands", "max_visited"):
            if getattr(self, name) < 1:
                raise RangeError(f"{name} must be positive, got {getattr(self, name)}")

    def admits(self, f: FenceDiagram) -> bool:
        return f.strands <= self.max_strands and len(f.word) <= self.max_bands


DEFAULT_BUDGET = SearchBudget()

RELATED = "Related"
NOT_RELATED = "NotRelatedByInvariant"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SearchResult:
    verdict:   str                              # Related | NotRelatedByInvariant | Unknown
    path:      tuple[MoveInstance, ...] = field(default=())
    invariant: Optional[str] = None             # the distinguishing quantity
    visited:   int = 0

    @classmethod
    def related(cls, path, visited: int = 0) -> "SearchResult":
        return cls(RELATED, tuple(path), visited=visited)

    @classmethod
    def not_related(cls, invariant: str) -> "SearchResult":
        return cls(NOT_RELATED, invariant=invariant)

    @classmethod
    def unknown(cls, visited: int) -> "SearchResult":
        return cls(UNKNOWN, visited=visited)

    def __str__(self):
        if self.verdict == NOT_RELATED:
            return f"verdict={NOT_RELATED}({self.invariant})"
        return f"verdict={self.verdict}"
