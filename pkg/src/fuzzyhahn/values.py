"""Extended values: exact rationals plus the two infinities.

Finite values are :class:`fractions.Fraction`; infinities are the float
constants ``math.inf`` and ``-math.inf``, which compare correctly against
fractions.  Sums that would combine opposite infinities raise.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InfinityError

INF = math.inf
NEG_INF = -math.inf


def to_value(x):
    """Coerce ints, fractions, ``"p/q"`` strings and ``"inf"``/``"-inf"`` to an extended value."""
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    if isinstance(x, str):
        s = x.strip()
        if s in ("inf", "+inf"):
            return INF
        if s == "-inf":
            return NEG_INF
        return Fraction(s)
    return Fraction(x)


def is_finite(x) -> bool:
    return not (isinstance(x, float) and math.isinf(x))


def add(a, b):
    if not is_finite(a) and not is_finite(b) and a != b:
        raise InfinityError(f"{a} + {b} is undefined")
    if not is_finite(a):
        return a
    if not is_finite(b):
        return b
    return a + b


def neg(a):
    return -a


def sub(a, b):
    return add(a, -b)


def fmt(x) -> str:
    """Wire form: ``"p/q"``, ``"p"``, ``"inf"`` or ``"-inf"``."""
    if not is_finite(x):
        return "inf" if x > 0 else "-inf"
    return str(Fraction(x))
