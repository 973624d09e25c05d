"""Budget enumeration, the quotient derivative and witness checking."""

from __future__ import annotations

import random

import pytest

from idealforms import membership, oracle, quotient, rank, trees
from idealforms.errors import QuotientOverflow
from idealforms.membership import Schema
from idealforms.oracle import Budget
from idealforms.text import parse_expr, parse_query, parse_tree
from idealforms.witnesses import UnboundedFamily, constant_branch


t = parse_tree


def test_enumerate_examples():
    assert oracle.enumerate_schema(t("chain"), Budget(3, 6, 200)) == [
        (0,), (0, 0), (0, 0, 0)
    ]
    assert oracle.enumerate_schema(t("fan([];const(eps))"), Budget(6, 2, 200)) == [
        (0,), (1,), (2,)
    ]
    p1 = trees.compile_ideal(parse_expr("P(1)"))
    assert oracle.enumerate_schema(p1, Budget(2, 1, 200)) == [(0, 0), (1, 0)]


def test_enumerate_queries_and_budget_cap():
    q = parse_query("union(finset{<5>,<0>},transversal(fan([];const(chain))))")
    got = oracle.enumerate_schema(q, Budget(4, 5, 100))
    assert (0,) in got and (5,) in got and (0, 0) in got and (3, 0) in got
    capped = oracle.enumerate_schema(t("full"), Budget(6, 6, 10))
    assert len(capped) <= 10


def test_enumerate_monotone_sampled():
    rng = random.Random(41)
    for _ in range(80):
        schema = oracle.rand_infinite_schema(rng, 6)
        base = Budget(rng.randrange(2, 5), rng.randrange(2, 5), rng.randrange(5, 50))
        grown = Budget(base.depth + 2, base.width + 1, base.count + 50)
        assert set(oracle.enumerate_schema(schema, base)) <= set(
            oracle.enumerate_schema(schema, grown)
        )


def test_explicit_derivative_examples():
    b = Budget(6, 6, 64)
    assert oracle.explicit_derivative(t("chain"), b) == (parse_ordinal_int(1), True)
    assert oracle.explicit_derivative(t("full"), b) == (parse_ordinal_int(0), False)
    assert oracle.explicit_derivative(t("fan([];const(chain))"), b) == (
        parse_ordinal_int(2),
        True,
    )


def parse_ordinal_int(n: int):
    from idealforms import ordinals

    return ordinals.from_int(n)


def test_explicit_derivative_overflow():
    with pytest.raises(QuotientOverflow):
        oracle.explicit_derivative(t("fan([];qdiag(w))"), Budget(6, 6, 16))


def test_quotient_shapes():
    q = quotient.build_quotient(t("chain"), 8)
    assert len(q) == 1 and q.edges[0] == [(0, 1)]
    q = quotient.build_quotient(t("full"), 8)
    assert len(q) == 1 and q.edges[0] == [(0, None)]
    q = quotient.build_quotient(t("fan([];const(chain))"), 8)
    assert len(q) == 2


def test_rank_agreement_sampled():
    rng = random.Random(42)
    agreements = 0
    for _ in range(200):
        schema = oracle.rand_schema(rng, 6)
        try:
            got = oracle.explicit_derivative(schema, Budget(6, 6, 64))
        except QuotientOverflow:
            continue
        assert got == rank.tree_rank(schema), str(schema)
        agreements += 1
    assert agreements >= 150


def test_check_witness_branch():
    q = Schema(t("spine([];const(chain))"))
    assert oracle.check_witness(constant_branch(1), q, oracle.WITNESS_BUDGET)
    # the zero branch misses the copy roots, whose entry is 1
    assert not oracle.check_witness(constant_branch(0), q, oracle.WITNESS_BUDGET)
    anti = Schema(t("fan([];const(eps))"))
    assert not oracle.check_witness(constant_branch(0), anti, oracle.WITNESS_BUDGET)


def test_check_witness_family():
    q = Schema(t("fan([];const(eps))"))
    w = membership.id_witness(q)
    assert isinstance(w, UnboundedFamily)
    assert oracle.check_witness(w, q, oracle.WITNESS_BUDGET)
    # a family whose maxima stall must be rejected
    stalled = UnboundedFamily(lambda: iter([(0,), (1,), (1,)] * 100))
    assert not oracle.check_witness(stalled, q, oracle.WITNESS_BUDGET)


def test_check_witness_embedding_rejects_collapse():
    from idealforms.witnesses import EmbeddingWitness

    class Collapse(EmbeddingWitness):
        def map(self, u):
            return (0,) * min(len(u), 2)

    broken = Collapse(t("full"), True, (), "collapse")
    assert not oracle.check_witness(broken, None, oracle.WITNESS_BUDGET)


def test_law_suite_report_shape():
    report = oracle.law_suite(7, 3)
    assert report.all_pass
    assert {law.name for law in report.laws} >= {
        "idempotence",
        "compile-round-trip",
        "two-path-agreement",
        "rank-oracle-agreement",
        "wo-duality",
    }
    payload = report.to_json()
    assert payload["allPass"] is True
    assert all(law["failures"] == 0 for law in payload["laws"])


def test_law_suite_deterministic_and_empty():
    a = oracle.law_suite(7, 4).to_json()
    b = oracle.law_suite(7, 4).to_json()
    assert a == b
    empty = oracle.law_suite(7, 0)
    assert all(law.trials == 0 and law.failures == 0 for law in empty.laws)


def test_per_vertex_stage_agreement():
    # the quotient's kill stage of each representative must equal the
    # symbolic domination stage of its cone schema
    from idealforms import ordinals

    rng = random.Random(777)
    checked = 0
    for _ in range(150):
        schema = oracle.rand_schema(rng, 6)
        if trees.is_empty(schema):
            continue
        try:
            q = quotient.build_quotient(schema, 64)
        except QuotientOverflow:
            continue
        _, _, stage = quotient.derivative_fixpoint(q)
        for v, cone in enumerate(q.vertices):
            info = rank.rank_info(cone)
            got = None if stage[v] is None else ordinals.from_int(stage[v])
            assert got == info.dom_stage, str(cone)
            checked += 1
    assert checked >= 200
