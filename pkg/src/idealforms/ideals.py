"""Term language for the ideal family and its canonical-form normalizer.

Expressions are built from FIN, the full power set, finite sums, constant
omega-sums, canonical limit diagonal sums and the orthogonal.  Every
expression rewrites to exactly one canonical form ``P(a)``, ``Q(a)`` or
``PQ(a)`` with an ordinal rank; two expressions denote isomorphic ideals
iff their canonical forms coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import ordinals
from .errors import NotLimit
from .ordinals import Ordinal, OrdKind


# --------------------------------------------------------------------------
# expression terms


class IdealExpr:
    """Base class for ideal expression terms; all subtypes are immutable."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Fin(IdealExpr):
    """The ideal of finite sets."""


@dataclass(frozen=True)
class Pow(IdealExpr):
    """The full power set (the trivial ideal)."""


@dataclass(frozen=True)
class P(IdealExpr):
    rank: Ordinal


@dataclass(frozen=True)
class Q(IdealExpr):
    rank: Ordinal


@dataclass(frozen=True)
class Perp(IdealExpr):
    child: IdealExpr


@dataclass(frozen=True)
class Sum(IdealExpr):
    """Finite direct sum; at least one summand."""

    parts: tuple[IdealExpr, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("finite sum needs at least one summand")


@dataclass(frozen=True)
class OmegaSum(IdealExpr):
    """Countable direct sum of copies of one ideal."""

    child: IdealExpr


@dataclass(frozen=True)
class LimSum(IdealExpr):
    """Canonical diagonal sum along the fundamental sequence of a limit rank."""

    rank: Ordinal


@dataclass(frozen=True)
class MixSum(IdealExpr):
    """Finitely many leading summands followed by an infinite tail sum."""

    heads: tuple[IdealExpr, ...]
    tail: IdealExpr

    def __post_init__(self) -> None:
        if not isinstance(self.tail, (OmegaSum, LimSum)):
            raise ValueError("mix tail must be an omega-sum or a limit sum")


# --------------------------------------------------------------------------
# canonical forms


class Kind(enum.Enum):
    P = "P"
    Q = "Q"
    PQ = "PQ"


@dataclass(frozen=True)
class CanonicalForm:
    kind: Kind
    rank: Ordinal

    def __str__(self) -> str:
        if self.rank.is_zero():
            if self.kind is Kind.P:
                return "POW"
            if self.kind is Kind.Q:
                return "FIN"
        return f"{self.kind.value}({self.rank})"


POW_FORM = CanonicalForm(Kind.P, ordinals.ZERO)
FIN_FORM = CanonicalForm(Kind.Q, ordinals.ZERO)


def combine(c1: CanonicalForm, c2: CanonicalForm) -> CanonicalForm:
    """Canonical form of the direct sum of two canonical ideals.

    The higher rank absorbs the lower regardless of kind; at equal rank
    the kinds join, with P + Q giving the mixed form PQ.
    """
    cmp = ordinals.compare(c1.rank, c2.rank)
    if cmp > 0:
        return c1
    if cmp < 0:
        return c2
    if c1.kind is c2.kind:
        return c1
    return CanonicalForm(Kind.PQ, c1.rank)


def combine_all(forms: list[CanonicalForm]) -> CanonicalForm:
    if not forms:
        raise ValueError("empty sum has no canonical form")
    acc = forms[0]
    for c in forms[1:]:
        acc = combine(acc, c)
    return acc


def perp(c: CanonicalForm) -> CanonicalForm:
    """Orthogonal: swaps P and Q at the same rank, fixes PQ."""
    if c.kind is Kind.P:
        return CanonicalForm(Kind.Q, c.rank)
    if c.kind is Kind.Q:
        return CanonicalForm(Kind.P, c.rank)
    return c


def omega_sum(c: CanonicalForm) -> CanonicalForm:
    """Canonical form of the omega-sum of copies of ``c``.

    P-kind sums regroup to the same P; a Q or mixed block pushed along an
    omega-sum steps the rank: the sum of Q(a)-copies is P(a+1) by
    definition, and the PQ case splits into an absorbed P part plus that.
    """
    if c.kind is Kind.P:
        return c
    return CanonicalForm(Kind.P, ordinals.succ(c.rank))


def lim_sum(rank: Ordinal) -> CanonicalForm:
    """Canonical form of the diagonal sum along a limit rank."""
    if ordinals.kind(rank) is not OrdKind.LIMIT:
        raise NotLimit(f"diagonal sum needs a limit rank, got {rank}")
    return CanonicalForm(Kind.P, rank)


def normalize(e: IdealExpr) -> CanonicalForm:
    """Bottom-up rewriting of an expression to its canonical form."""
    match e:
        case Fin():
            return FIN_FORM
        case Pow():
            return POW_FORM
        case P(rank):
            return CanonicalForm(Kind.P, rank)
        case Q(rank):
            return CanonicalForm(Kind.Q, rank)
        case Perp(child):
            return perp(normalize(child))
        case Sum(parts):
            return combine_all([normalize(p) for p in parts])
        case OmegaSum(child):
            return omega_sum(normalize(child))
        case LimSum(rank):
            return lim_sum(rank)
        case MixSum(heads, tail):
            forms = [normalize(h) for h in heads] + [normalize(tail)]
            return combine_all(forms)
    raise TypeError(f"not an ideal expression: {e!r}")


def b_rank(e: IdealExpr) -> Ordinal:
    return normalize(e).rank


def iso_check(e1: IdealExpr, e2: IdealExpr) -> bool:
    """True iff the two expressions denote isomorphic ideals."""
    return normalize(e1) == normalize(e2)


# --------------------------------------------------------------------------
# printing (grammar documented in docs/grammar.md)


def format_expr(e: IdealExpr) -> str:
    match e:
        case Fin():
            return "FIN"
        case Pow():
            return "POW"
        case P(rank):
            return f"P({rank})"
        case Q(rank):
            return f"Q({rank})"
        case Perp(child):
            return f"perp({format_expr(child)})"
        case Sum(parts):
            return f"sum({','.join(format_expr(p) for p in parts)})"
        case OmegaSum(child):
            return f"omega({format_expr(child)})"
        case LimSum(rank):
            return f"limsum({rank})"
        case MixSum(heads, tail):
            inner = ",".join(format_expr(h) for h in heads)
            return f"mix({inner};{format_expr(tail)})"
    raise TypeError(f"not an ideal expression: {e!r}")


def canonical_expr(c: CanonicalForm) -> IdealExpr:
    """An expression denoting the canonical form (P, Q or their sum)."""
    if c.kind is Kind.P:
        return P(c.rank)
    if c.kind is Kind.Q:
        return Q(c.rank)
    return Sum((P(c.rank), Q(c.rank)))
