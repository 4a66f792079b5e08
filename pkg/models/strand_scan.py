from dataclasses import dataclass, field


@dataclass
class StrandScan:
    strands:   int
    status:    str = "pending"   # pending | running | complete | error
    scanned:   int = 0
    total:     int = 0
    matches:   int = 0
    classes:   set[int] = field(default_factory=set)
    elapsed_s: float = 0.0
    error:     str = ""
