"""Containment, membership, orthogonal subsets and domination witnesses."""

from __future__ import annotations

import random

import pytest

from idealforms import membership, trees
from idealforms.errors import NotASubset, UnknownContainment
from idealforms.membership import FinSet, Schema, Ternary, Transversal, Union
from idealforms.oracle import (
    WITNESS_BUDGET,
    Budget,
    check_witness,
    enumerate_schema,
    rand_expr,
    rand_query,
)
from idealforms.text import parse_expr, parse_query, parse_tree
from idealforms.witnesses import DominatingBranch, UnboundedFamily


t = parse_tree
e = parse_expr
P1 = t("fan([];const(chain))")  # the standard omega-sum-of-finite copy
BLOCK0_CHAIN = t("fan([chain];const(empty))")


def test_subset_examples():
    assert membership.subset_of(FinSet(((0, 0),)), trees.CHAIN) is Ternary.YES
    assert membership.subset_of(FinSet(((0,), (1,))), trees.CHAIN) is Ternary.NO
    assert membership.subset_of(Schema(trees.CHAIN), trees.FULL) is Ternary.YES
    assert membership.subset_of(Schema(trees.CHAIN), t("fan([];const(eps))")) is Ternary.NO
    assert membership.subset_of(Schema(BLOCK0_CHAIN), P1) is Ternary.YES
    assert membership.subset_of(Transversal(P1), P1) is Ternary.YES


def test_subset_blockwise_and_unknown():
    assert membership.subset_of(Schema(t("fan([];const(chain))")), t("fan([];const(full))")) is Ternary.YES
    assert membership.subset_of(Schema(t("fan([];const(chain))")), t("fan([chain];const(empty))")) is Ternary.NO
    # depth-limited search cannot refute exotic containments: stays unknown
    deep = t("fan([];const(fan([];const(fan([];const(fan([];const(fan([];const(fan([];const(chain))))))))))))")
    assert membership.subset_of(Schema(deep), t("spine([];const(chain))")) is Ternary.UNKNOWN


def test_q_predicates_examples():
    q = parse_query("finset{<9,9,9>}")
    assert membership.q_in_wf(q) and membership.q_in_id(q)
    tr = Transversal(P1)
    assert membership.q_in_wf(tr) and not membership.q_in_id(tr)
    u = Union(Schema(trees.CHAIN), FinSet(((1,),)))
    assert not membership.q_in_wf(u) and membership.q_in_id(u)


def test_member_examples():
    # the block-0 chain misses the ideal but meets the orthogonal
    assert membership.member_of(Schema(BLOCK0_CHAIN), e("P(1)")) is False
    assert membership.member_perp(Schema(BLOCK0_CHAIN), e("P(1)")) is True
    # the transversal is the opposite corner
    assert membership.member_of(Transversal(P1), e("P(1)")) is True
    assert membership.member_perp(Transversal(P1), e("P(1)")) is False
    fin = FinSet(((0,), (0, 0), (0, 0, 0)))
    assert membership.member_of(fin, e("FIN")) is True


def test_member_preconditions():
    with pytest.raises(NotASubset):
        membership.member_of(FinSet(((1, 1),)), e("FIN"))
    with pytest.raises(NotASubset):
        membership.member_of(Schema(t("spine([];const(chain))")), e("Q(1)"))
    # a fan whose single block is the chain denotes a subset of the chain,
    # but no syntactic rule certifies it: honestly undecided
    sneaky = Schema(t("fan([chain];const(empty))"))
    assert membership.subset_of(sneaky, trees.CHAIN) is Ternary.UNKNOWN
    with pytest.raises(UnknownContainment):
        membership.member_of(sneaky, e("FIN"))


def test_frechet_examples():
    w = membership.frechet_witness(Schema(BLOCK0_CHAIN), e("P(1)"))
    assert w == Schema(BLOCK0_CHAIN)  # the chain itself is already orthogonal
    w = membership.frechet_witness(Schema(P1), e("P(1)"))
    assert w == Schema(BLOCK0_CHAIN)  # recursion descends into block 0
    q = Union(Schema(BLOCK0_CHAIN), Schema(t("fan([empty,chain];const(empty))")))
    w = membership.frechet_witness(q, e("P(1)"))
    assert w == Schema(BLOCK0_CHAIN)  # first positive side wins


def test_frechet_spine_pick():
    # copies are well-founded antichains: the witness picks one point each
    q = Schema(t("spine([];const(fan([];const(eps))))"))
    w = membership.frechet_witness(q, e("Q(1)"))
    assert membership.query_subset(w, q) is Ternary.YES
    assert membership.q_in_id(w)
    assert check_witness(w, (q, e("Q(1)")), Budget(8, 8, 100))


def test_frechet_rejects_positive_queries():
    with pytest.raises(NotASubset):
        membership.frechet_witness(Transversal(P1), e("P(1)"))


def test_id_witness_examples():
    w = membership.id_witness(Schema(trees.CHAIN))
    assert isinstance(w, DominatingBranch)
    assert w.prefix == () and set(w.period) == {0}
    w = membership.id_witness(Schema(t("spine([];const(chain))")))
    assert isinstance(w, DominatingBranch)
    assert all(w.value(i) == 1 for i in range(10))
    w = membership.id_witness(Schema(t("fan([];const(eps))")))
    assert isinstance(w, UnboundedFamily)
    assert w.elements(3) == [(0,), (1,), (2,)]


def test_id_witness_checks_sampled():
    rng = random.Random(21)
    for _ in range(80):
        expr = rand_expr(rng, 6)
        target = trees.compile_ideal(expr)
        q = rand_query(rng, target)
        w = membership.id_witness(q)
        assert check_witness(w, q, WITNESS_BUDGET), f"{q}"


def test_never_both_for_infinite_queries():
    rng = random.Random(22)
    seen = 0
    for _ in range(300):
        expr = rand_expr(rng, 6)
        target = trees.compile_ideal(expr)
        q = rand_query(rng, target)
        if not membership.q_is_infinite(q):
            continue
        if membership.subset_of(q, target) is not Ternary.YES:
            continue
        seen += 1
        assert not (membership.member_of(q, expr) and membership.member_perp(q, expr)), f"{q}"
    assert seen >= 100


def test_orthogonality_stabilizes():
    # a dominated query meets a well-founded query in a finite stable set
    q = Schema(t("spine([];const(chain))"))
    r = Schema(t("fan([];const(fan([];const(eps))))"))
    assert membership.q_in_id(q) and membership.q_in_wf(r)
    sizes = []
    for depth in (3, 5, 8):
        b = Budget(depth, 8, 500)
        inter = set(enumerate_schema(q, b)) & set(enumerate_schema(r, b))
        sizes.append(len(inter))
    assert sizes[0] <= sizes[1] <= sizes[2] <= 2


def test_restriction_coherence():
    # perp membership forces finite stable intersections with ideal members
    q = Schema(BLOCK0_CHAIN)
    assert membership.member_perp(q, e("P(1)"))
    r = Transversal(P1)
    assert membership.member_of(r, e("P(1)"))
    for depth in (4, 6, 8):
        b = Budget(depth, 8, 400)
        inter = set(enumerate_schema(q, b)) & set(enumerate_schema(r, b))
        assert len(inter) <= 1
