"""Membership of finitely presented query sets and witness extraction.

Queries are schemas, explicit finite sets, fan transversals, or finite
unions.  Containment in a target schema is decided syntactically and
conservatively; membership in the compiled target ideal then reduces to
the two structural predicates.  Negative membership yields a checkable
orthogonal subset, and every domination claim ships a branch or an
unbounded family that the oracle can re-verify at any budget.
"""

from __future__ import annotations

import enum
import heapq
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import ideals, trees
from .errors import NotASubset, UnknownContainment
from .ideals import IdealExpr
from .trees import (
    Chain,
    Const,
    Empty,
    Eps,
    Fan,
    Full,
    Rooted,
    Seq,
    Spine,
    TreeSchema,
)
from .witnesses import (
    DominatingBranch,
    UnboundedFamily,
    constant_branch,
    merge_branches,
    prepend_branch,
)


class QueryTerm:
    """Base class for finitely presented query sets."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_query(self)


@dataclass(frozen=True)
class Schema(QueryTerm):
    tree: TreeSchema


@dataclass(frozen=True)
class FinSet(QueryTerm):
    elements: tuple[Seq, ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("finite set elements must be pairwise distinct")


@dataclass(frozen=True)
class Transversal(QueryTerm):
    """Shortlex-least element of every nonempty block of a fan."""

    fan: TreeSchema

    def __post_init__(self) -> None:
        if not isinstance(self.fan, Fan):
            raise ValueError("transversal is only defined over a fan")


@dataclass(frozen=True)
class Union(QueryTerm):
    left: QueryTerm
    right: QueryTerm


class Ternary(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# --------------------------------------------------------------------------
# query denotation


def _transversal_pick(f: Fan, n: int) -> Optional[Seq]:
    block = trees.block_at(f, n)
    if trees.is_empty(block):
        return None
    p = trees.pick_least(block)
    assert p is not None
    return (n,) + p


def _transversal_block_count(f: Fan) -> Optional[int]:
    """Number of nonempty blocks; None when infinite."""
    if not trees.tail_is_trivial(f.tail):
        return None
    return sum(1 for h in f.heads if not trees.is_empty(h))


def q_iter_len(q: QueryTerm, length: int, max_entry: int) -> Iterator[Seq]:
    """Query elements of exact length in lex order (mirrors the schema op)."""
    match q:
        case Schema(tree):
            yield from trees.iter_len(tree, length, max_entry)
        case FinSet(elements):
            for u in sorted(elements):
                if len(u) == length and all(x <= max_entry for x in u):
                    yield u
        case Transversal(fan):
            for n in range(max_entry + 1):
                p = _transversal_pick(fan, n)
                if p is not None and len(p) == length and all(x <= max_entry for x in p):
                    yield p
        case Union(left, right):
            merged = heapq.merge(
                q_iter_len(left, length, max_entry), q_iter_len(right, length, max_entry)
            )
            for u, _ in itertools.groupby(merged):
                yield u
        case _:
            raise TypeError(f"not a query term: {q!r}")


def q_member(u: Seq, q: QueryTerm) -> bool:
    match q:
        case Schema(tree):
            return trees.member_elem(u, tree)
        case FinSet(elements):
            return u in elements
        case Transversal(fan):
            return bool(u) and u == _transversal_pick(fan, u[0])
        case Union(left, right):
            return q_member(u, left) or q_member(u, right)
    raise TypeError(f"not a query term: {q!r}")


def q_is_infinite(q: QueryTerm) -> bool:
    match q:
        case Schema(tree):
            return not trees.is_finite(tree)
        case FinSet(_):
            return False
        case Transversal(fan):
            return _transversal_block_count(fan) is None
        case Union(left, right):
            return q_is_infinite(left) or q_is_infinite(right)
    raise TypeError(f"not a query term: {q!r}")


# --------------------------------------------------------------------------
# the two ideal predicates on queries


def q_in_wf(q: QueryTerm) -> bool:
    match q:
        case Schema(tree):
            return trees.in_wf(tree)
        case FinSet(_):
            return True
        case Transversal(_):
            # distinct first coordinates: every branch of the generated
            # tree stops inside one pick
            return True
        case Union(left, right):
            return q_in_wf(left) and q_in_wf(right)
    raise TypeError(f"not a query term: {q!r}")


def q_in_id(q: QueryTerm) -> bool:
    match q:
        case Schema(tree):
            return trees.in_id(tree)
        case FinSet(_):
            return True
        case Transversal(fan):
            return _transversal_block_count(fan) is not None
        case Union(left, right):
            return q_in_id(left) and q_in_id(right)
    raise TypeError(f"not a query term: {q!r}")


# --------------------------------------------------------------------------
# conservative containment

_SEARCH_LEN = 5
_SEARCH_ENTRY = 5


def finite_elements(t: TreeSchema) -> list[Seq]:
    """All elements of a schema known to denote a finite set."""
    match t:
        case Empty():
            return []
        case Eps():
            return [()]
        case Rooted(child):
            return sorted({()} | set(finite_elements(child)))
        case Fan(heads, _):
            out = [(n,) + u for n, h in enumerate(heads) for u in finite_elements(h)]
            return sorted(out)
        case Spine(heads, _):
            out = [
                trees.spine_root(n) + u
                for n, h in enumerate(heads)
                for u in finite_elements(h)
            ]
            return sorted(out)
    raise ValueError(f"schema is not finite: {t}")


def subset_of(q: QueryTerm, s: TreeSchema) -> Ternary:
    """Syntactic, conservative containment of a query in a schema."""
    match q:
        case FinSet(elements):
            ok = all(trees.member_elem(u, s) for u in elements)
            return Ternary.YES if ok else Ternary.NO
        case Union(left, right):
            a, b = subset_of(left, s), subset_of(right, s)
            if Ternary.NO in (a, b):
                return Ternary.NO
            if a is Ternary.YES and b is Ternary.YES:
                return Ternary.YES
            return Ternary.UNKNOWN
        case Transversal(fan):
            if subset_of(Schema(fan), s) is Ternary.YES:
                return Ternary.YES
            return _subset_search(q, s)
        case Schema(tree):
            return _subset_schema(tree, s)
    raise TypeError(f"not a query term: {q!r}")


def _subset_schema(t: TreeSchema, s: TreeSchema) -> Ternary:
    if t == s or isinstance(s, Full) or trees.is_empty(t):
        return Ternary.YES
    if trees.is_finite(t):
        ok = all(trees.member_elem(u, s) for u in finite_elements(t))
        return Ternary.YES if ok else Ternary.NO
    if isinstance(t, Rooted):
        if not trees.member_elem((), s):
            return Ternary.NO
        return _subset_schema(t.child, s)
    if isinstance(s, Rooted):
        if _subset_schema(t, s.child) is Ternary.YES:
            return Ternary.YES
        return _subset_search(Schema(t), s)
    if isinstance(t, Chain) and isinstance(s, Chain):
        return Ternary.YES
    if type(t) is type(s) and isinstance(t, (Fan, Spine)):
        verdict = _subset_blockwise(t, s)
        if verdict is not Ternary.UNKNOWN:
            return verdict
    return _subset_search(Schema(t), s)


def _subset_blockwise(t: Fan | Spine, s: Fan | Spine) -> Ternary:
    span = max(len(t.heads), len(s.heads))
    sure = True
    for n in range(span):
        v = _subset_schema(trees.block_at(t, n), trees.block_at(s, n))
        if v is Ternary.NO:
            return Ternary.NO
        sure = sure and v is Ternary.YES
    t_tail, s_tail = t.tail, s.tail
    if trees.tail_is_trivial(t_tail):
        return Ternary.YES if sure else Ternary.UNKNOWN
    if t_tail == s_tail:
        return Ternary.YES if sure else Ternary.UNKNOWN
    if trees.tail_is_trivial(s_tail):
        return Ternary.NO  # t keeps nonempty blocks beyond every s block
    if isinstance(t_tail, Const) and isinstance(s_tail, Const):
        v = _subset_schema(t_tail.block, s_tail.block)
        if v is Ternary.NO:
            return Ternary.NO
        return Ternary.YES if sure and v is Ternary.YES else Ternary.UNKNOWN
    return Ternary.UNKNOWN


def _subset_search(q: QueryTerm, s: TreeSchema) -> Ternary:
    """Bounded counterexample search; never answers YES."""
    for length in range(_SEARCH_LEN + 1):
        for u in q_iter_len(q, length, _SEARCH_ENTRY):
            if not trees.member_elem(u, s):
                return Ternary.NO
    return Ternary.UNKNOWN


def query_subset(w: QueryTerm, q: QueryTerm) -> Ternary:
    """Containment between queries; used to re-check emitted witnesses."""
    if isinstance(q, Schema):
        return subset_of(w, q.tree)
    if isinstance(q, Union):
        for side in (q.left, q.right):
            if query_subset(w, side) is Ternary.YES:
                return Ternary.YES
    if isinstance(w, FinSet):
        ok = all(q_member(u, q) for u in w.elements)
        return Ternary.YES if ok else Ternary.NO
    if w == q:
        return Ternary.YES
    for length in range(_SEARCH_LEN + 1):
        for u in q_iter_len(w, length, _SEARCH_ENTRY):
            if not q_member(u, q):
                return Ternary.NO
    return Ternary.UNKNOWN


# --------------------------------------------------------------------------
# membership in a compiled target


def _require_subset(q: QueryTerm, target: IdealExpr) -> None:
    s = trees.compile_ideal(target)
    verdict = subset_of(q, s)
    if verdict is Ternary.NO:
        raise NotASubset(f"{q} is not contained in the standard copy of {ideals.normalize(target)}")
    if verdict is Ternary.UNKNOWN:
        raise UnknownContainment(f"containment of {q} in {ideals.normalize(target)} undecided")


def member_of(q: QueryTerm, target: IdealExpr) -> bool:
    """Membership of the query set in the target's standard copy."""
    _require_subset(q, target)
    return q_in_wf(q)


def member_perp(q: QueryTerm, target: IdealExpr) -> bool:
    """Membership in the orthogonal of the target's standard copy."""
    _require_subset(q, target)
    return q_in_id(q)


# --------------------------------------------------------------------------
# orthogonal subset extraction (the Frechet recursion)


def frechet_witness(q: QueryTerm, target: IdealExpr) -> QueryTerm:
    """Infinite branch-dominated subset of a membership-negative query."""
    _require_subset(q, target)
    if q_in_wf(q):
        raise NotASubset(f"{q} already belongs to the ideal; no witness to extract")
    return Schema(_fw_query(q))


def _fw_query(q: QueryTerm) -> TreeSchema:
    match q:
        case Schema(tree):
            return _fw_schema(tree)
        case Union(left, right):
            return _fw_query(left) if not q_in_wf(left) else _fw_query(right)
    raise AssertionError(f"query is well-founded: {q}")


def _fw_schema(t: TreeSchema) -> TreeSchema:
    match t:
        case Chain() | Full():
            return trees.CHAIN
        case Rooted(child):
            return _fw_schema(child)
        case Fan(heads, tail):
            for n, h in enumerate(heads):
                if not trees.is_empty(h) and not trees.in_wf(h):
                    return Fan((trees.EMPTY,) * n + (_fw_schema(h),), trees.CONST_EMPTY)
            assert not trees.tail_is_trivial(tail)
            block = trees.block_at(t, len(heads))
            return Fan(
                (trees.EMPTY,) * len(heads) + (_fw_schema(block),), trees.CONST_EMPTY
            )
        case Spine(heads, tail):
            for n, h in enumerate(heads):
                if not trees.is_empty(h) and not trees.in_wf(h):
                    return Spine((trees.EMPTY,) * n + (_fw_schema(h),), trees.CONST_EMPTY)
            assert not trees.tail_is_trivial(tail)
            block = trees.block_at(t, len(heads))
            if not trees.in_wf(block):
                return Spine(
                    (trees.EMPTY,) * len(heads) + (_fw_schema(block),), trees.CONST_EMPTY
                )
            # copies are well-founded but unboundedly many: take the fixed
            # pick in every copy, a set dominated alongside the spine
            pick = trees.pick_least(block)
            assert pick is not None
            return Spine((trees.EMPTY,) * len(heads), Const(trees.singleton(pick)))
    raise AssertionError(f"schema is well-founded: {t}")


# --------------------------------------------------------------------------
# domination witnesses


def id_witness(q: QueryTerm) -> DominatingBranch | UnboundedFamily:
    """A dominating branch when the query is dominated, else an unbounded
    family refuting every candidate branch."""
    if q_in_id(q):
        return _branch_query(q)
    return UnboundedFamily(lambda: _unb_query(q), note=format_query(q))


def _branch_query(q: QueryTerm) -> DominatingBranch:
    match q:
        case Schema(tree):
            return _branch_schema(tree)
        case FinSet(elements):
            return _branch_finite(list(elements))
        case Transversal(fan):
            count = _transversal_block_count(fan)
            assert count is not None
            picks = [p for n in range(len(fan.heads)) if (p := _transversal_pick(fan, n))]
            return _branch_finite(picks)
        case Union(left, right):
            return merge_branches([_branch_query(left), _branch_query(right)])
    raise TypeError(f"not a query term: {q!r}")


def _branch_finite(elems: list[Seq]) -> DominatingBranch:
    if not elems:
        return constant_branch(0)
    width = max(len(u) for u in elems)
    prefix = tuple(max((u[i] for u in elems if len(u) > i), default=0) for i in range(width))
    return DominatingBranch(prefix, (0,))


def _branch_schema(t: TreeSchema) -> DominatingBranch:
    match t:
        case Empty() | Eps() | Chain():
            return constant_branch(0)
        case Rooted(child):
            return _branch_schema(child)
        case Fan(heads, _):
            live = [(n, h) for n, h in enumerate(heads) if not trees.is_empty(h)]
            if not live:
                return constant_branch(0)
            first = max(n for n, _ in live)
            rest = merge_branches([_branch_schema(h) for _, h in live])
            return prepend_branch((first,), rest)
        case Spine(heads, tail):
            subs = [_branch_schema(h) for h in heads if not trees.is_empty(h)]
            if isinstance(tail, Const) and not trees.tail_is_trivial(tail):
                subs.append(_branch_schema(tail.block))
            # spine entries stay at most 1; copy offsets shift block
            # branches, so their overall supremum dominates every position
            bound = max([1] + [b.sup() for b in subs])
            return constant_branch(bound)
    raise AssertionError(f"schema is not dominated: {t}")


def _unb_query(q: QueryTerm) -> Iterator[Seq]:
    match q:
        case Schema(tree):
            yield from _unb_schema(tree)
        case Transversal(fan):
            for n in itertools.count():
                p = _transversal_pick(fan, n)
                if p is not None:
                    yield p
        case Union(left, right):
            yield from _unb_query(left) if not q_in_id(left) else _unb_query(right)
        case _:
            raise AssertionError(f"query is dominated: {q}")


def _unb_schema(t: TreeSchema) -> Iterator[Seq]:
    match t:
        case Full():
            for n in itertools.count():
                yield (n,)
        case Rooted(child):
            yield from _unb_schema(child)
        case Fan(heads, tail):
            if trees.tail_is_trivial(tail):
                for n, h in enumerate(heads):
                    if not trees.is_empty(h) and not trees.in_id(h):
                        for u in _unb_schema(h):
                            yield (n,) + u
                        return
                raise AssertionError(f"schema is dominated: {t}")
            for n in itertools.count():
                p = trees.pick_least(trees.block_at(t, n))
                if p is not None:
                    yield (n,) + p
        case Spine(heads, tail):
            for n, h in enumerate(heads):
                if not trees.is_empty(h) and not trees.in_id(h):
                    for u in _unb_schema(h):
                        yield trees.spine_root(n) + u
                    return
            block = trees.block_at(t, len(heads))
            assert not trees.in_id(block)
            for u in _unb_schema(block):
                yield trees.spine_root(len(heads)) + u
        case _:
            raise AssertionError(f"schema is dominated: {t}")


# --------------------------------------------------------------------------
# printing (grammar documented in docs/grammar.md)


def format_query(q: QueryTerm) -> str:
    match q:
        case Schema(tree):
            return trees.format_tree(tree)
        case FinSet(elements):
            inner = ",".join(trees.format_seq_elem(u) for u in elements)
            return f"finset{{{inner}}}"
        case Transversal(fan):
            return f"transversal({trees.format_tree(fan)})"
        case Union(left, right):
            return f"union({format_query(left)},{format_query(right)})"
    raise TypeError(f"not a query term: {q!r}")
