"""Checkable certificates emitted by the classifiers and membership ops.

Witnesses are data, not trust: each one carries enough structure for the
oracle to re-verify the claim at any budget.  Branches are eventually
periodic so that pointwise domination is decidable; embeddings are total
maps realized lazily with memoized expansion state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import trees
from .trees import Seq, TreeSchema


@dataclass(frozen=True)
class DominatingBranch:
    """Eventually periodic branch dominating every element of a set."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")

    def value(self, i: int) -> int:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def dominates(self, u: Seq) -> bool:
        return all(u[i] <= self.value(i) for i in range(len(u)))

    def sup(self) -> int:
        return max(self.prefix + self.period)

    def __str__(self) -> str:
        pre = ",".join(str(x) for x in self.prefix)
        per = ",".join(str(x) for x in self.period)
        return f"[{pre}]({per})*"


def constant_branch(c: int) -> DominatingBranch:
    return DominatingBranch((), (c,))


def merge_branches(branches: list[DominatingBranch]) -> DominatingBranch:
    """Pointwise maximum; dominates whatever each input dominated."""
    if not branches:
        return constant_branch(0)
    prefix_len = max(len(b.prefix) for b in branches)
    period_len = 1
    for b in branches:
        period_len = period_len * len(b.period) // _gcd(period_len, len(b.period))
    prefix = tuple(max(b.value(i) for b in branches) for i in range(prefix_len))
    period = tuple(
        max(b.value(prefix_len + i) for b in branches) for i in range(period_len)
    )
    return DominatingBranch(prefix, period)


def prepend_branch(head: tuple[int, ...], b: DominatingBranch) -> DominatingBranch:
    return DominatingBranch(head + b.prefix, b.period)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass
class UnboundedFamily:
    """Enumerates set elements whose coordinate maxima strictly increase."""

    source: Callable[[], Iterator[Seq]]
    note: str = ""

    def elements(self, count: int) -> list[Seq]:
        out: list[Seq] = []
        best = -1
        for u in self.source():
            m = max(u) if u else -1
            if m > best:
                out.append(u)
                best = m
            if len(out) >= count:
                break
        return out


class EmbeddingWitness:
    """Total injective map of finite sequences into a schema's denotation.

    ``generated`` selects whether images live in the raw denoted set or in
    the tree it generates; ``provenance`` records the schema child the
    embedding factors through.
    """

    def __init__(self, target: TreeSchema, generated: bool, provenance: Seq, label: str):
        self.target = target
        self.generated = generated
        self.provenance = provenance
        self.label = label

    def map(self, u: Seq) -> Seq:
        raise NotImplementedError

    def image_member(self, u: Seq) -> bool:
        v = self.map(u)
        if self.generated:
            return trees.gen_member(v, self.target)
        return trees.member_elem(v, self.target)


class PrefixEmbedding(EmbeddingWitness):
    """Identity embedding re-rooted under a fixed prefix (full sub-block)."""

    def __init__(self, target: TreeSchema, generated: bool, provenance: Seq):
        label = "identity" if not provenance else f"identity under {trees.format_seq_elem(provenance)}"
        super().__init__(target, generated, provenance, label)

    def map(self, u: Seq) -> Seq:
        return self.provenance + u


@dataclass(frozen=True)
class Expansion:
    """A core node (relative path) with infinitely many core children.

    ``index`` maps k to the concrete child coordinate; every child has the
    same cone schema ``child``.
    """

    path: Seq
    index: Callable[[int], int]
    child: TreeSchema


class CoreEmbedding(EmbeddingWitness):
    """Embedding of the full sequence tree into a nonempty derivative core.

    At every image node an extension with infinitely many surviving
    children is chosen; level n of the domain maps bijectively onto those
    children, so comparability is preserved and reflected.
    """

    def __init__(self, target: TreeSchema, expander: Callable[[TreeSchema], Expansion]):
        super().__init__(target, True, (), "derivative-core expansion")
        self._expander = expander
        self._state: dict[Seq, tuple[Seq, TreeSchema]] = {(): ((), target)}
        self._expansions: dict[Seq, Expansion] = {}

    def map(self, u: Seq) -> Seq:
        return self._position(u)[0]

    def _position(self, u: Seq) -> tuple[Seq, TreeSchema]:
        hit = self._state.get(u)
        if hit is not None:
            return hit
        pos, cone = self._position(u[:-1])
        exp = self._expansions.get(u[:-1])
        if exp is None:
            exp = self._expander(cone)
            self._expansions[u[:-1]] = exp
        out = (pos + exp.path + (exp.index(u[-1]),), exp.child)
        self._state[u] = out
        return out


def iter_domain(depth: int, width: int, count: int) -> list[Seq]:
    """Deterministic sample of the sequence tree for witness checking."""
    out: list[Seq] = []
    for length in range(depth + 1):
        for u in itertools.product(range(width + 1), repeat=length):
            out.append(u)
            if len(out) >= count:
                return out
    return out
