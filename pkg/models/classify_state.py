import time
from math import factorial
from threading import Lock

from .strand_scan import StrandScan


def cycle_count(strands: int) -> int:
    """Number of single-cycle band words on the given number of lines."""
    if strands == 2:
        return 1
    return factorial(strands - 1) // 2 * factorial(strands)


class ClassifyState:
    def __init__(self, strand_counts: list[int]):
        self.results    = {b: StrandScan(strands=b, total=cycle_count(b)) for b in strand_counts}
        self.lock       = Lock()
        self.start_time = time.time()

    @property
    def total(self):
        return len(self.results)

    def mark_running(self, strands: int):
        with self.lock:
            self.results[strands].status = "running"

    def update(self, strands: int, scanned: int, status: str | None = None,
               elapsed_s: float | None = None):
        with self.lock:
            r = self.results[strands]
            r.scanned = scanned
            if status:
                r.status = status
            if elapsed_s is not None:
                r.elapsed_s = elapsed_s

    def record_match(self, strands: int, rot_abs: int):
        with self.lock:
            r = self.results[strands]
            r.matches += 1
            r.classes.add(rot_abs)

    def mark_error(self, strands: int, msg: str):
        with self.lock:
            self.results[strands].status = "error"
            self.results[strands].error  = msg

    # ── Computed stats ────────────────────────────────────────────────────
    @property
    def n_complete(self):
        return sum(1 for r in self.results.values() if r.status == "complete")

    @property
    def n_running(self):
        return sum(1 for r in self.results.values() if r.status == "running")

    @property
    def n_error(self):
        return sum(1 for r in self.results.values() if r.status == "error")

    @property
    def n_matches(self):
        return sum(r.matches for r in self.results.values())

    @property
    def classes(self) -> list[int]:
        with self.lock:
            return sorted(set().union(*(r.classes for r in self.results.values())))

    @property
    def elapsed(self):
        return round(time.time() - self.start_time, 1)
