"""Countable ordinals below epsilon_0 in Cantor normal form.

An ordinal is a finite sum ``w^e1*c1 + ... + w^ek*ck`` with strictly
decreasing exponents (themselves ordinals) and positive integer
coefficients; the empty sum is 0.  This representation is closed under
comparison, addition and the fundamental-sequence assignment used by the
canonical-form engine, which is all the rest of the package needs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotLimit


class OrdKind(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


@dataclass(frozen=True)
class Ordinal:
    """Cantor normal form: tuple of (exponent, coefficient) pairs."""

    terms: tuple[tuple[Ordinal, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for exponent, coeff in self.terms:
            if coeff < 1:
                raise ValueError(f"coefficient {coeff} < 1")
            if prev is not None and compare(prev, exponent) <= 0:
                raise ValueError("exponents not strictly decreasing")
            prev = exponent

    def is_zero(self) -> bool:
        return not self.terms

    def __lt__(self, other: Ordinal) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: Ordinal) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: Ordinal) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: Ordinal) -> bool:
        return compare(self, other) >= 0

    def __add__(self, other: Ordinal) -> Ordinal:
        return add(self, other)

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal[{format_ordinal(self)}]"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError(f"ordinals are non-negative, got {n}")
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


def omega_power(exponent: Ordinal, coeff: int = 1) -> Ordinal:
    return Ordinal(((exponent, coeff),))


def to_int(a: Ordinal) -> int:
    """Inverse of ``from_int``; raises for infinite ordinals."""
    if a.is_zero():
        return 0
    if len(a.terms) == 1 and a.terms[0][0].is_zero():
        return a.terms[0][1]
    raise ValueError(f"{a} is not a natural number")


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total CNF order; returns -1, 0 or 1."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition; terms of ``a`` below b's lead exponent are absorbed."""
    if b.is_zero():
        return a
    if a.is_zero():
        return b
    lead = b.terms[0][0]
    kept = [t for t in a.terms if compare(t[0], lead) > 0]
    merged = list(b.terms)
    # a's term at the lead exponent merges coefficients instead of vanishing
    if len(kept) < len(a.terms) and compare(a.terms[len(kept)][0], lead) == 0:
        merged[0] = (lead, a.terms[len(kept)][1] + b.terms[0][1])
    return Ordinal(tuple(kept) + tuple(merged))


def succ(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def kind(a: Ordinal) -> OrdKind:
    if a.is_zero():
        return OrdKind.ZERO
    if a.terms[-1][0].is_zero():
        return OrdKind.SUCCESSOR
    return OrdKind.LIMIT


def pred(a: Ordinal) -> Ordinal:
    """Predecessor of a successor ordinal."""
    if kind(a) is not OrdKind.SUCCESSOR:
        raise ValueError(f"{a} has no predecessor")
    exponent, coeff = a.terms[-1]
    rest = a.terms[:-1]
    if coeff > 1:
        return Ordinal(rest + ((exponent, coeff - 1),))
    return Ordinal(rest)


def fund_seq(a: Ordinal, n: int) -> Ordinal:
    """n-th member of the canonical fundamental sequence of a limit ordinal.

    Rules: (b + w^(g+1))[n] = b + w^g*(n+1) and (b + w^l)[n] = b + w^(l[n])
    for l limit.  Strictly increasing in n with supremum ``a``.
    """
    if kind(a) is not OrdKind.LIMIT:
        raise NotLimit(f"fundamental sequence of non-limit ordinal {a}")
    if n < 0:
        raise ValueError("index must be >= 0")
    exponent, coeff = a.terms[-1]
    head = a.terms[:-1] if coeff == 1 else a.terms[:-1] + ((exponent, coeff - 1),)
    base = Ordinal(head)
    if kind(exponent) is OrdKind.SUCCESSOR:
        return add(base, omega_power(pred(exponent), n + 1))
    return add(base, omega_power(fund_seq(exponent, n)))


def format_ordinal(a: Ordinal) -> str:
    """Render in the ordinal grammar; parseable back by ``text.parse_ordinal``."""
    if a.is_zero():
        return "0"
    parts = []
    for exponent, coeff in a.terms:
        if exponent.is_zero():
            parts.append(str(coeff))
            continue
        if exponent == ONE:
            body = "w"
        elif exponent.terms[0][0].is_zero():
            body = f"w^{exponent.terms[0][1]}"  # finite exponent
        elif len(exponent.terms) == 1 and exponent.terms[0][1] == 1:
            body = f"w^{format_ordinal(exponent)}"  # pure power: right-assoc chain
        else:
            body = f"w^({format_ordinal(exponent)})"
        parts.append(body if coeff == 1 else f"{body}*{coeff}")
    return "+".join(parts)
