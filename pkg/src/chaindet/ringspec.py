"""Parser for the ring specification grammar.

    ring    := "Z/" INT             integers mod a prime power
             | "GR(" INT "," INT ")"  Galois ring GR(p^e, r); first INT is p^e
             | "F" INT "[u]/u^" INT   F_q[u]/(u^e); first INT is q
    product := ring ("x" ring)*

Whitespace around tokens is ignored.  Parse failures raise
:class:`~chaindet.errors.RingSpecError` carrying the offset and the
expected tokens; structurally valid specs with bad numbers raise
:class:`~chaindet.errors.NotPrimePowerError`.
"""

from __future__ import annotations

from .errors import RingSpecError
from .products import ProductRing
from .rings import ChainRing, galois_ring, truncated_poly_ring, zmod


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise RingSpecError("parse error", self.pos, repr(literal))
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise RingSpecError("parse error", start, "an integer")
        return int(self.text[start:self.pos])

    def ring(self) -> ChainRing:
        head = self.peek()
        if head == "Z":
            self.expect("Z/")
            return zmod(self.integer())
        if head == "G":
            self.expect("GR(")
            pe = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return galois_ring(pe, r)
        if head == "F":
            self.expect("F")
            q = self.integer()
            self.expect("[u]/u^")
            return truncated_poly_ring(q, self.integer())
        raise RingSpecError("parse error", self.pos, "'Z/', 'GR(' or 'F'")


def parse_ring_spec(text: str) -> ChainRing | ProductRing:
    """Parse a single chain ring or an ``x``-separated product of them."""
    scanner = _Scanner(text)
    rings = [scanner.ring()]
    while not scanner.at_end():
        scanner.expect("x")
        rings.append(scanner.ring())
    if len(rings) == 1:
        return rings[0]
    return ProductRing(rings)


def parse_ring_list(text: str) -> list[ChainRing | ProductRing]:
    """Comma-separated list of ring specs (the CLI ``--rings`` flag).

    Commas inside ``GR(...)`` do not split.
    """
    parts: list[str] = []
    depth, current = 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [parse_ring_spec(part) for part in parts if part.strip()]
