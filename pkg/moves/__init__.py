from .instance import (
    ENDS, FORMS, LOWER, UPPER, MoveInstance, MoveKind, format_split, parse_split,
)
from .macros import (
    default_zigzag_split, macro_height_exchange, macro_new_zigzag,
    macro_vertical_exchange,
)
from .rewrite import (
    applicable_moves, apply_move, apply_path, commute, deflatable, deflate,
    inflate, inflation_moves, inverse_move, slide, slide_form, slide_pair, slip,
    turn, twirl,
)

__all__ = [
    "ENDS", "FORMS", "LOWER", "UPPER", "MoveInstance", "MoveKind",
    "format_split", "parse_split",
    "default_zigzag_split", "macro_height_exchange", "macro_new_zigzag",
    "macro_vertical_exchange",
    "applicable_moves", "apply_move", "apply_path", "commute", "deflatable",
    "deflate", "inflate", "inflation_moves", "inverse_move", "slide",
    "slide_form", "slide_pair", "slip", "turn", "twirl",
]
