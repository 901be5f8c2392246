"""Optic expressions: parsing and resolution against a name registry.

Grammar::

    expr    := segment ("." segment)*
    segment := IDENT | IDENT "(" STRING ")"

where STRING is double-quoted with backslash escapes. Segments resolve to
optics through the registry (plain names) or through the parameterized
forms ``field("key")`` and ``variant("tag")``; the whole chain composes
left to right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Tuple

from .composition import compose
from .errors import ExprError
from .values import each_traversal, field_lens, variant_prism


@dataclass(frozen=True)
class Segment:
    name: str
    argument: Optional[str]
    position: int  # offset of the segment's first character

    def render(self) -> str:
        if self.argument is None:
            return self.name
        return f"{self.name}({json.dumps(self.argument)})"


def _ident(text: str, pos: int) -> Tuple[str, int]:
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    if pos == start or text[start].isdigit():
        raise ExprError("expected a name", start)
    return text[start:pos], pos


def _string(text: str, pos: int) -> Tuple[str, int]:
    if pos >= len(text) or text[pos] != '"':
        raise ExprError("expected a double-quoted string", pos)
    cursor = pos + 1
    while cursor < len(text):
        if text[cursor] == "\\":
            cursor += 2
            continue
        if text[cursor] == '"':
            raw = text[pos:cursor + 1]
            try:
                return json.loads(raw), cursor + 1
            except ValueError:
                raise ExprError("bad string escape", pos) from None
        cursor += 1
    raise ExprError("unterminated string", pos)


def parse_expr(text: str) -> List[Segment]:
    if not text:
        raise ExprError("empty expression", 0)
    segments, pos = [], 0
    while True:
        start = pos
        name, pos = _ident(text, pos)
        argument = None
        if pos < len(text) and text[pos] == "(":
            argument, pos = _string(text, pos + 1)
            if pos >= len(text) or text[pos] != ")":
                raise ExprError("expected ')'", pos)
            pos += 1
        segments.append(Segment(name, argument, start))
        if pos == len(text):
            return segments
        if text[pos] != ".":
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        pos += 1


def render_expr(segments: List[Segment]) -> str:
    return ".".join(seg.render() for seg in segments)


_PARAMETERIZED = {
    "field": field_lens,
    "variant": variant_prism,
}


def resolve_segment(segment: Segment, registry: Dict[str, object]):
    if segment.argument is not None:
        factory = _PARAMETERIZED.get(segment.name)
        if factory is None:
            raise ExprError(
                f"{segment.name!r} takes no argument", segment.position
            )
        return factory(segment.argument)
    if segment.name in _PARAMETERIZED:
        raise ExprError(
            f"{segment.name!r} needs a quoted argument", segment.position
        )
    if segment.name == "each":
        return each_traversal()
    found = registry.get(segment.name)
    if found is None:
        raise ExprError(f"unknown optic {segment.name!r}", segment.position)
    return found


def resolve_expr(segments: List[Segment], registry: Dict[str, object]):
    """Resolve every segment and fold the chain with compose."""
    optics = [resolve_segment(seg, registry) for seg in segments]
    return reduce(compose, optics)
