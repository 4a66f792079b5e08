from core import FenceDiagram, expand_band_word, is_quasipositive_annulus, trace_closure
from core.errors import NotAnnulus


def linking_number(f: FenceDiagram) -> int:
    """Half the signed count of crossings between the two boundary components."""
    if not is_quasipositive_annulus(f):
        raise NotAnnulus(f"{f} is not a quasipositive annulus")
    trace = trace_closure(expand_band_word(f))
    between = sum(
        sign for a, b, sign in trace.crossings
        if trace.component[a] != trace.component[b]
    )
    return between // 2
