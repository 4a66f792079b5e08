from dataclasses import dataclass
from enum import Enum
from typing import Optional


class MoveKind(str, Enum):
    INFLATE = "inflate"
    DEFLATE = "deflate"
    SLIP    = "slip"
    SLIDE   = "slide"
    TWIRL   = "twirl"
    TURN    = "turn"


UPPER = "upper"
LOWER = "lower"
FORMS = ("F1", "F2", "F3")
ENDS  = ("front", "back")


@dataclass(frozen=True)
class MoveInstance:
    kind:   MoveKind
    at:     Optional[int] = None               # slip/slide position t, inflate insertion t
    line:   Optional[int] = None               # inflate/deflate line k
    target: Optional[str] = None               # slide form F1 | F2 | F3
    end:    Optional[str] = None               # twirl front | back
    split:  Optional[tuple[str, ...]] = None   # inflate: upper/lower per band end of line k

    def to_args(self) -> list[str]:
        """CLI flags reproducing this move with `move --kind ...`."""
        args = ["--kind", self.kind.value]
        if self.at is not None:
            args += ["--at", str(self.at)]
        if self.line is not None:
            args += ["--line", str(self.line)]
        if self.target is not None:
            args += ["--target", self.target]
        if self.end is not None:
            args += ["--end", self.end]
        if self.split is not None:
            args += ["--split", format_split(self.split)]
        return args

    def __str__(self):
        return " ".join(self.to_args()[1:])


def format_split(split: tuple[str, ...]) -> str:
    return "".join("l" if side == LOWER else "u" for side in split) or "-"


def parse_split(text: str) -> tuple[str, ...]:
    if text == "-":
        return ()
    sides = []
    for ch in text.lower():
        if ch == "u":
            sides.append(UPPER)
        elif ch == "l":
            sides.append(LOWER)
        else:
            raise ValueError(f"split letters are u or l, got {ch!r}")
    return tuple(sides)
