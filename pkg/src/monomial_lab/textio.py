"""Text and JSON forms of monomial ideals.

Grammar (whitespace is ignored)::

    ideal    := monomial (',' monomial)*
    monomial := factor ('*' factor)*
    factor   := 'x' INDEX ('^' EXP)?

``INDEX >= 1`` and ``EXP >= 1``.  A variable repeated inside one monomial adds
its exponents.  The literal ``1`` is not part of the grammar; the unit ideal
prints as ``1`` and the zero ideal as ``0`` for display only.
"""
from __future__ import annotations

import json
from typing import Dict, List, Optional

from .core import ExpVec, MonomialIdeal, make_ideal
from .errors import DomainError, ParseError


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek()
            what = "end of input" if found is None else repr(found)
            raise ParseError(f"expected {ch!r}, found {what}", self._offset())
        self.pos += 1

    def integer(self, what: str) -> tuple:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected {what}", self._offset())
        return int(self.text[start:self.pos]), self._offset(start)

    def _offset(self, pos: Optional[int] = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))


def _parse_monomial(sc: _Scanner) -> Dict[int, int]:
    exps: Dict[int, int] = {}
    while True:
        sc.expect("x")
        index, at = sc.integer("variable index")
        if index < 1:
            raise ParseError("variable index must be at least 1", at)
        exp = 1
        if sc.peek() == "^":
            sc.pos += 1
            exp, at = sc.integer("exponent")
            if exp < 1:
                raise ParseError("exponent must be at least 1", at)
        exps[index] = exps.get(index, 0) + exp
        if sc.peek() != "*":
            return exps
        sc.pos += 1


def parse_monomials(text: str) -> List[Dict[int, int]]:
    """Parse ``text`` into one ``{index: exponent}`` map per monomial (1-based)."""
    if not text or not text.strip():
        raise ParseError("empty ideal text", 0)
    sc = _Scanner(text)
    monomials = [_parse_monomial(sc)]
    while sc.peek() == ",":
        sc.pos += 1
        monomials.append(_parse_monomial(sc))
    if sc.peek() is not None:
        raise ParseError(f"unexpected character {sc.peek()!r}", sc._offset())
    return monomials


def parse_ideal(text: str, nvars: Optional[int] = None) -> MonomialIdeal:
    """Canonical ideal from the text grammar; ``nvars`` may enlarge the ring."""
    monomials = parse_monomials(text)
    n = max(max(m) for m in monomials)
    if nvars is not None:
        if nvars < n:
            raise DomainError(f"--nvars {nvars} is smaller than the largest index x{n}")
        n = nvars
    vecs = []
    for m in monomials:
        v = [0] * n
        for i, e in m.items():
            v[i - 1] = e
        vecs.append(v)
    return make_ideal(n, vecs)


def format_monomial(v: ExpVec) -> str:
    factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(v) if e]
    return "*".join(factors) if factors else "1"


def format_ideal(I: MonomialIdeal) -> str:
    """Canonical text: generators in lex order (``x1`` largest), ``^1`` omitted."""
    if I.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in I.gens)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"n": I.ambient_n, "gens": [list(g) for g in I.gens]}


def ideal_from_json(data) -> MonomialIdeal:
    """Build an ideal from ``{"n": int, "gens": [[int, ...], ...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "gens" not in data:
        raise DomainError('ideal JSON must be an object with "n" and "gens"')
    n, gens = data["n"], data["gens"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(gens, list) or not all(
        isinstance(g, list) and all(isinstance(e, int) and not isinstance(e, bool) for e in g)
        for g in gens
    ):
        raise DomainError('"gens" must be a list of integer lists')
    return make_ideal(n, gens)
