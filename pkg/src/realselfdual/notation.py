"""
Compact text notation for ramification data.

``(1,0)^3,(1,0)_1`` means three points of weight (1,0) with k = 0 followed by
one point of weight (1,0) with k = 1.  ``_k`` and ``^m`` may appear in either
order; both default to k = 0, m = 1.
"""

import re

from .errors import InvalidParameter

_ITEM = re.compile(
    r"\s*\(\s*(?P<w>-?\d+(?:\s*,\s*-?\d+)*)\s*\)"
    r"(?:_(?P<k1>\d+)(?:\^(?P<m1>\d+))?|\^(?P<m2>\d+)(?:_(?P<k2>\d+))?)?\s*"
)


def parse_weight(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        return tuple(int(a) for a in text.split(",") if a.strip() != "")
    except ValueError:
        raise InvalidParameter(f"cannot parse weight {text!r}") from None


def parse_points(text: str) -> list[tuple[tuple[int, ...], int, int]]:
    """Parse notation into (weight, k, count) triples, preserving order."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _ITEM.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidParameter(f"cannot parse ramification data at {text[pos:]!r}")
        w = tuple(int(a) for a in m.group("w").split(","))
        k = int(m.group("k1") or m.group("k2") or 0)
        count = int(m.group("m1") or m.group("m2") or 1)
        if count < 1:
            raise InvalidParameter("multiplicity must be positive")
        out.append((w, k, count))
        pos = m.end()
        if pos < len(text):
            if text[pos] != ",":
                raise InvalidParameter(f"expected ',' at {text[pos:]!r}")
            pos += 1
    if not out:
        raise InvalidParameter("empty ramification data")
    return out


def format_points(triples) -> str:
    parts = []
    for w, k, count in triples:
        s = "(" + ",".join(map(str, w)) + ")"
        if k:
            s += f"_{k}"
        if count > 1:
            s += f"^{count}"
        parts.append(s)
    return ",".join(parts)
