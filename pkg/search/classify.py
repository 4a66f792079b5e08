"""
search/classify.py
------------------
Classification of annulus diagrams with a given linking number by the
absolute rotation number, scanning one strand count per worker.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Optional

import pandas as pd

from core import FenceDiagram
from core.errors import FenceError
from legendrian import legendrian_invariants
from models import ClassifyState
from oracles import linking_number

from .budget import DEFAULT_BUDGET, SearchBudget
from .enumerate import cycle_diagrams

logger = logging.getLogger(__name__)


class AnnulusClass(NamedTuple):
    rot_abs:        int
    representative: FenceDiagram
    tb:             int
    count:          int


def strand_range(budget: SearchBudget) -> list[int]:
    # a cycle on b lines uses b bands
    return list(range(2, min(budget.max_strands, budget.max_bands) + 1))


def scan_strands(strands: int, lk_target: int, state: ClassifyState) -> list[dict]:
    records, scanned = [], 0
    state.mark_running(strands)
    try:
        started = time.time()
        for scanned, f in enumerate(cycle_diagrams(strands), start=1):
            if linking_number(f) == lk_target:
                inv = legendrian_invariants(f)
                records.append({
                    "strands": f.strands, "key": f.key, "diagram": f,
                    "tb": inv.tb, "rot": inv.rot, "rot_abs": inv.rot_abs,
                })
                state.record_match(strands, inv.rot_abs)
            if scanned % 500 == 0:
                state.update(strands, scanned=scanned)
        state.update(strands, scanned=scanned,
                     status="complete", elapsed_s=round(time.time() - started, 2))
    except Exception as e:
        logger.exception("scan of %d strands failed", strands)
        state.mark_error(strands, str(e))
    return records


def classify_annuli(lk_target: int, budget: SearchBudget = DEFAULT_BUDGET,
                    state: Optional[ClassifyState] = None) -> list[AnnulusClass]:
    if lk_target < 1:
        raise FenceError(f"linking number target must be positive, got {lk_target}")
    counts = strand_range(budget)
    state = state or ClassifyState(counts)

    with ThreadPoolExecutor(max_workers=len(counts)) as executor:
        batches = list(executor.map(lambda b: scan_strands(b, lk_target, state), counts))

    rows = sorted((r for batch in batches for r in batch),
                  key=lambda r: (r["rot_abs"], r["strands"], r["key"]))
    df = pd.DataFrame(rows,
                      columns=["strands", "diagram", "tb", "rot", "rot_abs"])
    if df.empty:
        return []
    wrong = df[df.tb != -lk_target]
    if not wrong.empty:
        raise FenceError(f"tb differs from -lk on {wrong.iloc[0].diagram}: tb={wrong.iloc[0].tb}")

    classes = []
    for rot_abs, group in df.groupby("rot_abs", sort=True):
        first = group.iloc[0]
        classes.append(AnnulusClass(int(rot_abs), first.diagram, int(first.tb), len(group)))
    logger.info("lk=%d: %d classes %s", lk_target, len(classes), [c.rot_abs for c in classes])
    return classes
