"""Display-rounding conventions.

All headline numbers are shown to four decimal places, rounded half away
from zero; full precision is always kept internally.  Very small p-values
are shown as "< 0.0001" instead of a misleading "0.0000".
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal

P_DISPLAY_FLOOR = 0.00005  # below this, p is shown as "< 0.0001"


def round4(value: float) -> float:
    """Round to 4 decimals, ties away from zero."""
    if not math.isfinite(value):
        return value
    q = Decimal(repr(value)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)
    return float(q)


def fmt(value: float, decimals: int = 4) -> str:
    """Format a real at ``decimals`` places, ties away from zero."""
    if math.isnan(value):
        return "undefined"
    if math.isinf(value):
        return "∞" if value > 0 else "-∞"
    quantum = Decimal(1).scaleb(-decimals)
    q = Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP)
    # avoid the "-0.0000" artefact
    if q == 0:
        q = abs(q)
    return f"{q:.{decimals}f}"


def fmt_int(value: float) -> str:
    """Format an integer-valued quantity without decimals."""
    return str(int(round(value)))


def fmt_p(p: float) -> str:
    """p-value display: 4 decimals, or "< 0.0001" for very small p."""
    if p < P_DISPLAY_FLOOR:
        return "< 0.0001"
    return fmt(p)
