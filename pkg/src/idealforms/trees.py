"""Tree schemas: finite terms denoting subsets of the finite sequences.

A schema denotes a (usually infinite) set of finite integer sequences.
Fans hang translated blocks under the children of the root; spines hang
copies at the nodes ``0^n 1`` along the all-zero branch.  Diagonal tails
index their blocks by the fundamental sequence of a limit rank and denote
compiled canonical schemas, so the language is closed under the compiler
below and under taking cones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import ideals, ordinals
from .errors import NotLimit
from .ideals import CanonicalForm, IdealExpr, Kind
from .ordinals import Ordinal, OrdKind

Seq = tuple[int, ...]


class TreeSchema:
    """Base class for schema terms; all subtypes are immutable."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_tree(self)


class SchemaSeq:
    """Base class for block sequences used as fan/spine tails."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(TreeSchema):
    """The empty set."""


@dataclass(frozen=True)
class Eps(TreeSchema):
    """The singleton holding the empty sequence."""


@dataclass(frozen=True)
class Chain(TreeSchema):
    """The set of all-zero sequences of positive length."""


@dataclass(frozen=True)
class Full(TreeSchema):
    """Every finite sequence."""


@dataclass(frozen=True)
class Rooted(TreeSchema):
    """The child set plus the empty sequence (cones of chains need this)."""

    child: TreeSchema


@dataclass(frozen=True)
class Fan(TreeSchema):
    """Block n translated under child n; heads first, then the tail blocks."""

    heads: tuple[TreeSchema, ...]
    tail: SchemaSeq


@dataclass(frozen=True)
class Spine(TreeSchema):
    """Copy n translated under 0^n 1 along the all-zero branch."""

    heads: tuple[TreeSchema, ...]
    tail: SchemaSeq


@dataclass(frozen=True)
class Const(SchemaSeq):
    block: TreeSchema


@dataclass(frozen=True)
class QDiag(SchemaSeq):
    """Block n denotes the compiled Q-schema at the n-th fundamental stage."""

    rank: Ordinal
    offset: int = 0

    def __post_init__(self) -> None:
        if ordinals.kind(self.rank) is not OrdKind.LIMIT:
            raise NotLimit(f"diagonal tail needs a limit rank, got {self.rank}")


@dataclass(frozen=True)
class PDiag(SchemaSeq):
    """Block n denotes the compiled P-schema at the n-th fundamental stage."""

    rank: Ordinal
    offset: int = 0

    def __post_init__(self) -> None:
        if ordinals.kind(self.rank) is not OrdKind.LIMIT:
            raise NotLimit(f"diagonal tail needs a limit rank, got {self.rank}")


EMPTY = Empty()
EPS = Eps()
CHAIN = Chain()
FULL = Full()
CONST_EMPTY = Const(EMPTY)


# --------------------------------------------------------------------------
# compiling canonical forms into schemas

# cache writes are idempotent, so concurrent racing recomputation is benign
_COMPILE_CACHE: dict[tuple[Kind, Ordinal], TreeSchema] = {}


def compile_form(c: CanonicalForm) -> TreeSchema:
    """Schema whose denoted set restricts the well-founded ideal to ``c``."""
    key = (c.kind, c.rank)
    cached = _COMPILE_CACHE.get(key)
    if cached is not None:
        return cached
    rank_kind = ordinals.kind(c.rank)
    match c.kind:
        case Kind.P if rank_kind is OrdKind.ZERO:
            out: TreeSchema = Fan((), Const(EPS))
        case Kind.P if rank_kind is OrdKind.SUCCESSOR:
            out = Fan((), Const(compile_form(CanonicalForm(Kind.Q, ordinals.pred(c.rank)))))
        case Kind.P:
            out = Fan((), QDiag(c.rank))
        case Kind.Q if rank_kind is OrdKind.ZERO:
            out = CHAIN
        case Kind.Q if rank_kind is OrdKind.SUCCESSOR:
            out = Spine((), Const(compile_form(CanonicalForm(Kind.P, ordinals.pred(c.rank)))))
        case Kind.Q:
            out = Spine((), PDiag(c.rank))
        case Kind.PQ:
            out = Fan(
                (compile_form(CanonicalForm(Kind.P, c.rank)), compile_form(CanonicalForm(Kind.Q, c.rank))),
                CONST_EMPTY,
            )
    _COMPILE_CACHE[key] = out
    return out


def compile_ideal(e: IdealExpr) -> TreeSchema:
    return compile_form(ideals.normalize(e))


def seq_block(tail: SchemaSeq, i: int) -> TreeSchema:
    """Denoted block ``i`` of a tail sequence."""
    match tail:
        case Const(block):
            return block
        case QDiag(rank, offset):
            return compile_form(CanonicalForm(Kind.Q, ordinals.fund_seq(rank, i + offset)))
        case PDiag(rank, offset):
            return compile_form(CanonicalForm(Kind.P, ordinals.fund_seq(rank, i + offset)))
    raise TypeError(f"not a schema sequence: {tail!r}")


def shift_tail(tail: SchemaSeq, k: int) -> SchemaSeq:
    if k == 0 or isinstance(tail, Const):
        return tail
    if isinstance(tail, QDiag):
        return QDiag(tail.rank, tail.offset + k)
    if isinstance(tail, PDiag):
        return PDiag(tail.rank, tail.offset + k)
    raise TypeError(f"not a schema sequence: {tail!r}")


def block_at(node: Fan | Spine, n: int) -> TreeSchema:
    if n < len(node.heads):
        return node.heads[n]
    return seq_block(node.tail, n - len(node.heads))


def tail_is_trivial(tail: SchemaSeq) -> bool:
    """True when the tail contributes no elements at all."""
    return isinstance(tail, Const) and is_empty(tail.block)


# --------------------------------------------------------------------------
# denotation basics


def is_empty(t: TreeSchema) -> bool:
    # deep compiled schemas share sub-terms, so cache on the instance
    cached = t.__dict__.get("_empty")
    if cached is not None:
        return cached
    match t:
        case Empty():
            out = True
        case Eps() | Chain() | Full() | Rooted():
            out = False
        case Fan(heads, tail) | Spine(heads, tail):
            out = all(is_empty(h) for h in heads) and tail_is_trivial(tail)
        case _:
            raise TypeError(f"not a schema: {t!r}")
    object.__setattr__(t, "_empty", out)
    return out


def is_finite(t: TreeSchema) -> bool:
    match t:
        case Empty() | Eps():
            return True
        case Chain() | Full():
            return False
        case Rooted(child):
            return is_finite(child)
        case Fan(heads, tail) | Spine(heads, tail):
            # a non-trivial tail repeats a nonempty block infinitely often
            return all(is_finite(h) for h in heads) and tail_is_trivial(tail)
    raise TypeError(f"not a schema: {t!r}")


def member_elem(u: Seq, t: TreeSchema) -> bool:
    """Point membership of a sequence in the denoted set."""
    match t:
        case Empty():
            return False
        case Eps():
            return u == ()
        case Chain():
            return len(u) >= 1 and all(x == 0 for x in u)
        case Full():
            return True
        case Rooted(child):
            return u == () or member_elem(u, child)
        case Fan(_, _):
            if not u:
                return False
            return member_elem(u[1:], block_at(t, u[0]))
        case Spine(_, _):
            split = _split_spine(u)
            if split is None:
                return False
            n, rest = split
            return member_elem(rest, block_at(t, n))
    raise TypeError(f"not a schema: {t!r}")


def _split_spine(u: Seq) -> Optional[tuple[int, Seq]]:
    """Split ``0^n 1 rest`` into (n, rest); None if u misses every copy root."""
    n = 0
    while n < len(u) and u[n] == 0:
        n += 1
    if n == len(u) or u[n] != 1:
        return None
    return n, u[n + 1 :]


def spine_root(n: int) -> Seq:
    return (0,) * n + (1,)


def cone_of(t: TreeSchema, u: Seq) -> TreeSchema:
    """Schema of the elements extending ``u``, re-rooted at ``u``."""
    if not u:
        return t
    match t:
        case Empty() | Eps():
            return EMPTY
        case Chain():
            if all(x == 0 for x in u):
                return Rooted(CHAIN)
            return EMPTY
        case Full():
            return FULL
        case Rooted(child):
            return cone_of(child, u)
        case Fan(_, _):
            return cone_of(block_at(t, u[0]), u[1:])
        case Spine(heads, tail):
            zeros = 0
            while zeros < len(u) and u[zeros] == 0:
                zeros += 1
            if zeros == len(u):
                # still on the spine: blocks below index ``zeros`` fall away
                if zeros < len(heads):
                    return Spine(heads[zeros:], tail)
                return Spine((), shift_tail(tail, zeros - len(heads)))
            if u[zeros] != 1:
                return EMPTY
            return cone_of(block_at(t, zeros), u[zeros + 1 :])
    raise TypeError(f"not a schema: {t!r}")


# --------------------------------------------------------------------------
# the two ideals

# Diagonal tails only ever hold compiled blocks of rank >= 1: a compiled
# Q-schema is never wholly well-founded and a compiled P-schema is only at
# rank 0, while a compiled P-schema is never branch-dominated and a compiled
# Q-schema is only at rank 0.  Both predicates are therefore constant along
# a diagonal tail and block 0 decides them.


def _tail_blocks_all(tail: SchemaSeq, pred) -> bool:
    if isinstance(tail, Const):
        return is_empty(tail.block) or pred(tail.block)
    return pred(seq_block(tail, 0))


def in_wf(t: TreeSchema) -> bool:
    """True iff the denoted set is contained in a well-founded tree."""
    match t:
        case Empty() | Eps():
            return True
        case Chain() | Full():
            return False
        case Rooted(child):
            return in_wf(child)
        case Fan(heads, tail):
            # blocks sit under an antichain: any branch enters one block
            return all(in_wf(h) for h in heads) and _tail_blocks_all(tail, in_wf)
        case Spine(heads, tail):
            if not tail_is_trivial(tail):
                return False  # infinitely many copies force the zero branch
            return all(is_empty(h) or in_wf(h) for h in heads)
    raise TypeError(f"not a schema: {t!r}")


def in_id(t: TreeSchema) -> bool:
    """True iff the denoted set is dominated by a single branch."""
    match t:
        case Empty() | Eps() | Chain():
            return True
        case Full():
            return False
        case Rooted(child):
            return in_id(child)
        case Fan(heads, tail):
            if not tail_is_trivial(tail):
                return False  # unbounded first coordinates
            return all(is_empty(h) or in_id(h) for h in heads)
        case Spine(heads, tail):
            # spine entries are at most 1 and copy offsets keep each
            # position influenced by finitely many copies
            return all(is_empty(h) or in_id(h) for h in heads) and _tail_blocks_all(tail, in_id)
    raise TypeError(f"not a schema: {t!r}")


def depth_bound(t: TreeSchema) -> Optional[int]:
    """Maximum element length, or None when lengths are unbounded."""
    match t:
        case Empty() | Eps():
            return 0
        case Chain() | Full():
            return None
        case Rooted(child):
            return depth_bound(child)
        case Fan(heads, tail):
            bounds = [depth_bound(h) for h in heads if not is_empty(h)]
            if not tail_is_trivial(tail):
                if not isinstance(tail, Const):
                    return None
                bounds.append(depth_bound(tail.block))
            if any(b is None for b in bounds):
                return None
            return 1 + max(bounds, default=-1) if bounds else 0
        case Spine(heads, tail):
            if not tail_is_trivial(tail):
                return None  # copy roots alone have unbounded length
            bounds = []
            for n, h in enumerate(heads):
                if is_empty(h):
                    continue
                b = depth_bound(h)
                if b is None:
                    return None
                bounds.append(n + 1 + b)
            return max(bounds, default=0)
    raise TypeError(f"not a schema: {t!r}")


# --------------------------------------------------------------------------
# bounded enumeration and picks


def iter_len(t: TreeSchema, length: int, max_entry: int) -> Iterator[Seq]:
    """Denoted elements of exact ``length`` with entries <= max_entry, in
    lexicographic order, produced lazily."""
    if length < 0:
        return
    match t:
        case Empty():
            return
        case Eps():
            if length == 0:
                yield ()
        case Chain():
            if length >= 1:
                yield (0,) * length
        case Full():
            if length == 0:
                yield ()
            else:
                for u in itertools.product(range(max_entry + 1), repeat=length):
                    yield u
        case Rooted(child):
            if length == 0:
                yield ()
            else:
                yield from iter_len(child, length, max_entry)
        case Fan(_, _):
            if length >= 1:
                for n in range(max_entry + 1):
                    for v in iter_len(block_at(t, n), length - 1, max_entry):
                        yield (n,) + v
        case Spine(_, _):
            if length >= 1 and max_entry >= 1:
                # copy roots 0^n 1 sort descending in n under lex order
                for n in range(length - 1, -1, -1):
                    root = spine_root(n)
                    for v in iter_len(block_at(t, n), length - n - 1, max_entry):
                        yield root + v
        case _:
            raise TypeError(f"not a schema: {t!r}")


def stage_of(u: Seq) -> int:
    """Smallest k such that u fits the box of length k and entries < k."""
    return max(len(u), max(u) + 1 if u else 0)


def iter_canonical(t: TreeSchema, stage_cap: int) -> Iterator[Seq]:
    """Budget-independent canonical order: by stage, shortlex within."""
    for k in range(stage_cap + 1):
        for length in range(k + 1):
            for u in iter_len(t, length, k - 1):
                if stage_of(u) == k:
                    yield u


def elements_up_to(t: TreeSchema, max_len: int, max_entry: int) -> list[Seq]:
    """Denoted elements within the box, in shortlex order (small boxes only)."""
    out: list[Seq] = []
    for length in range(max_len + 1):
        out.extend(iter_len(t, length, max_entry))
    return out


def shortlex(u: Seq) -> tuple[int, Seq]:
    return (len(u), u)


def pick_least(t: TreeSchema) -> Optional[Seq]:
    """Shortlex-least denoted element; None for the empty set.

    Along constant and diagonal tails the block picks only get longer, so
    the first nonempty block already carries the least candidate.
    """
    cached = t.__dict__.get("_pick", False)
    if cached is not False:
        return cached
    out = _pick_least(t)
    object.__setattr__(t, "_pick", out)
    return out


def _pick_least(t: TreeSchema) -> Optional[Seq]:
    match t:
        case Empty():
            return None
        case Eps() | Full():
            return ()
        case Chain():
            return (0,)
        case Rooted(_):
            return ()
        case Fan(heads, tail) | Spine(heads, tail):
            candidates = []
            for n, h in enumerate(heads):
                p = pick_least(h)
                if p is not None:
                    candidates.append((n, p))
            if not tail_is_trivial(tail):
                base = len(heads)
                p = pick_least(seq_block(tail, 0))
                if p is not None:
                    candidates.append((base, p))
            if not candidates:
                return None
            if isinstance(t, Fan):
                return min(((n,) + p for n, p in candidates), key=shortlex)
            return min((spine_root(n) + p for n, p in candidates), key=shortlex)
    raise TypeError(f"not a schema: {t!r}")


def singleton(u: Seq) -> TreeSchema:
    """Schema denoting exactly the one sequence ``u``."""
    if not u:
        return EPS
    inner = singleton(u[1:])
    heads = (EMPTY,) * u[0] + (inner,)
    return Fan(heads, CONST_EMPTY)


# --------------------------------------------------------------------------
# the generated tree


def gen_member(u: Seq, t: TreeSchema) -> bool:
    """Membership of ``u`` in the tree generated by the denoted set."""
    match t:
        case Empty():
            return False
        case Eps():
            return u == ()
        case Chain():
            return all(x == 0 for x in u)
        case Full():
            return True
        case Rooted(child):
            return u == () or gen_member(u, child)
        case Fan(_, _):
            if not u:
                return not is_empty(t)
            return gen_member(u[1:], block_at(t, u[0]))
        case Spine(heads, tail):
            if is_empty(t):
                return False
            zeros = 0
            while zeros < len(u) and u[zeros] == 0:
                zeros += 1
            if zeros == len(u):
                # on the spine: some copy at or above this depth must be alive
                if not tail_is_trivial(tail):
                    return True
                return any(not is_empty(h) for h in heads[zeros:])
            if u[zeros] != 1:
                return False
            return gen_member(u[zeros + 1 :], block_at(t, zeros))
    raise TypeError(f"not a schema: {t!r}")


# --------------------------------------------------------------------------
# printing (grammar documented in docs/grammar.md)


def format_tree(t: TreeSchema) -> str:
    match t:
        case Empty():
            return "empty"
        case Eps():
            return "eps"
        case Chain():
            return "chain"
        case Full():
            return "full"
        case Rooted(child):
            return f"rooted({format_tree(child)})"
        case Fan(heads, tail):
            inner = ",".join(format_tree(h) for h in heads)
            return f"fan([{inner}];{format_seq(tail)})"
        case Spine(heads, tail):
            inner = ",".join(format_tree(h) for h in heads)
            return f"spine([{inner}];{format_seq(tail)})"
    raise TypeError(f"not a schema: {t!r}")


def format_seq(s: SchemaSeq) -> str:
    match s:
        case Const(block):
            return f"const({format_tree(block)})"
        case QDiag(rank, offset):
            return f"qdiag({rank})" if offset == 0 else f"qdiag({rank},{offset})"
        case PDiag(rank, offset):
            return f"pdiag({rank})" if offset == 0 else f"pdiag({rank},{offset})"
    raise TypeError(f"not a schema sequence: {s!r}")


def format_seq_elem(u: Seq) -> str:
    return "<" + ",".join(str(x) for x in u) + ">"
