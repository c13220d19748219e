"""JSON mass documents and Likert count documents.

A mass document looks like::

    {"frame": ["a", "b", "c"],
     "masses": [{"focal": "w2", "mass": 0.4}, {"focal": "w1..w2", "mass": 0.6}]}

Labels are display-only: their position in ``frame`` is the ordinal, and
focal elements always use the ``w<i>`` grammar.
"""

from __future__ import annotations

import json
import math
from numbers import Real

from .exceptions import InvalidElement, InvalidParameter, NotNormalized, ParseError, UnknownElement
from .frame import OrderedFrame, format_element, parse_element, singleton
from .mass import MassFunction

__all__ = [
    "dumps_json",
    "emit_mass_document",
    "fmt",
    "likert_mass",
    "load_json",
    "mass_document_text",
    "parse_likert_document",
    "parse_mass_document",
    "round12",
]


def round12(x: float) -> float:
    """Round to 12 significant digits."""
    return float(format(x, ".12g"))


def fmt(x: float) -> str:
    return format(x, ".12g")


def load_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None


def _parse_frame(doc, source: str) -> OrderedFrame:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", source)
    labels = doc.get("frame")
    if not isinstance(labels, list) or not all(isinstance(lab, str) for lab in labels):
        raise ParseError("'frame' must be a list of label strings", f"{source}:frame")
    try:
        return OrderedFrame(labels)
    except InvalidElement as exc:
        raise ParseError(str(exc), f"{source}:frame") from None


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
        raise ParseError(f"expected a finite number, got {value!r}", where)
    return float(value)


def parse_mass_document(text: str, *, renormalize: bool = False, source: str = "<input>") -> MassFunction:
    doc = load_json(text, source)
    frame = _parse_frame(doc, source)
    records = doc.get("masses")
    if not isinstance(records, list):
        raise ParseError("'masses' must be a list", f"{source}:masses")
    entries = []
    for k, rec in enumerate(records):
        where = f"{source}:masses[{k}]"
        if not isinstance(rec, dict) or "focal" not in rec or "mass" not in rec:
            raise ParseError("each record needs 'focal' and 'mass'", where)
        if not isinstance(rec["focal"], str):
            raise ParseError("'focal' must be a string", f"{where}.focal")
        try:
            x = frame.validate(parse_element(rec["focal"]))
        except ParseError as exc:
            raise ParseError(str(exc), f"{where}.focal") from None
        except UnknownElement as exc:
            raise UnknownElement(f"{where}.focal: {exc}") from None
        entries.append((x, _number(rec["mass"], f"{where}.mass")))
    try:
        return MassFunction(frame, entries, renormalize=renormalize)
    except NotNormalized as exc:
        raise NotNormalized(f"{source}: {exc}") from None


def emit_mass_document(m: MassFunction) -> dict:
    return {
        "frame": list(m.frame.labels),
        "masses": [{"focal": format_element(x), "mass": round12(v)} for x, v in m.items()],
    }


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def mass_document_text(m: MassFunction) -> str:
    return dumps_json(emit_mass_document(m))


def parse_likert_document(text: str, source: str = "<input>"):
    """Parse ``{"frame": [...], "groups": [{"name": ..., "counts": [...]}, ...]}``.

    Returns the frame and a list of ``(name, counts)`` pairs.
    """
    doc = load_json(text, source)
    frame = _parse_frame(doc, source)
    groups = doc.get("groups")
    if not isinstance(groups, list) or not groups:
        raise ParseError("'groups' must be a non-empty list", f"{source}:groups")
    out = []
    for k, group in enumerate(groups):
        where = f"{source}:groups[{k}]"
        if not isinstance(group, dict) or not isinstance(group.get("counts"), list):
            raise ParseError("each group needs a 'counts' list", where)
        counts = group["counts"]
        if len(counts) != frame.n:
            raise ParseError(f"expected {frame.n} counts, got {len(counts)}", f"{where}.counts")
        counts = [_number(c, f"{where}.counts[{i}]") for i, c in enumerate(counts)]
        if any(c < 0 for c in counts) or sum(counts) <= 0:
            raise ParseError("counts must be non-negative with a positive total", f"{where}.counts")
        out.append((str(group.get("name", f"group{k + 1}")), counts))
    return frame, out


def likert_mass(frame: OrderedFrame, counts, discount: float = 0.0) -> MassFunction:
    """Pool one group's answers into a single mass function.

    Each respondent contributes a categorical mass on their answer, with
    ``discount`` of it moved to the whole frame; the group mass is the mean
    of those.
    """
    if not 0.0 <= discount <= 1.0:
        raise InvalidParameter(f"discount must be in [0, 1], got {discount}")
    total = math.fsum(counts)
    entries = [(frame.omega, discount)]
    entries += [(singleton(i), (1.0 - discount) * c / total) for i, c in enumerate(counts, start=1)]
    return MassFunction(frame, entries)
