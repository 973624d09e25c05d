"""Scattered orders: classification, duality, rational embeddings."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from idealforms import ideals, orders
from idealforms.ideals import CanonicalForm, Kind
from idealforms.orders import Cat, NonScattered, OmegaCat, Rev, Scattered
from idealforms.text import parse_order, parse_ordinal


t = parse_order


def form(kind: str, rank_text: str) -> CanonicalForm:
    return CanonicalForm(Kind[kind], parse_ordinal(rank_text))


def test_classify_examples():
    assert orders.wo_classify(t("N")) == Scattered(form("P", "0"))
    assert orders.wo_classify(t("rev(N)")) == Scattered(form("Q", "0"))
    assert orders.wo_classify(t("osum([];rev(N))")) == Scattered(form("P", "1"))
    assert orders.wo_classify(t("cat(N,rev(N))")) == Scattered(form("PQ", "0"))
    out = orders.wo_classify(t("QQ"))
    assert isinstance(out, NonScattered)


def test_scattered_check():
    assert orders.scattered_check(t("rev(osum([];N))"))
    assert not orders.scattered_check(t("cat(N,QQ)"))
    assert orders.scattered_check(t("N"))


def test_reverse_examples():
    rev, out = orders.wo_self_dual(t("N"))
    assert rev == t("rev(N)") and out == Scattered(form("Q", "0"))
    rev, out = orders.wo_self_dual(t("osum([];rev(N))"))
    assert rev == Rev(OmegaCat((), Rev(orders.NAT)))
    assert out == Scattered(form("Q", "1"))
    rev, out = orders.wo_self_dual(t("QQ"))
    assert rev == t("QQ") and isinstance(out, NonScattered)


def test_rationalize_examples():
    assert orders.rationalize(t("N"), 3) == [0, 1, 2]
    decreasing = orders.rationalize(t("rev(N)"), 3)
    assert decreasing[0] > decreasing[1] > decreasing[2]
    vals = orders.rationalize(t("cat(N,rev(N))"), 4)
    a0, b0, a1, b1 = vals
    assert a0 < a1 < b1 < b0  # two increasing strictly below two decreasing


def test_rationalize_prefix_stable():
    term = t("osum([rev(N)];cat(N,N))")
    assert orders.rationalize(term, 6) == orders.rationalize(term, 12)[:6]


def test_duality_sampled():
    from idealforms.oracle import _rand_order

    rng = random.Random(31)

    for _ in range(200):
        term = _rand_order(rng, 7)
        left = orders.wo_classify(orders.reverse_term(term))
        right = orders.wo_classify(term)
        assert isinstance(left, Scattered) and isinstance(right, Scattered)
        assert left.form == ideals.perp(right.form), str(term)


def test_sum_law_sampled():
    from idealforms.oracle import _rand_order

    rng = random.Random(32)
    for _ in range(150):
        t1, t2 = _rand_order(rng, 5), _rand_order(rng, 5)
        whole = orders.wo_classify(Cat((t1, t2)))
        assert isinstance(whole, Scattered)
        assert whole.form == ideals.combine(
            orders.wo_classify(t1).form, orders.wo_classify(t2).form
        )


def test_order_faithful_sampled():
    from idealforms.oracle import _rand_order

    rng = random.Random(33)
    for _ in range(60):
        term = _rand_order(rng, 6)
        positions = list(itertools.islice(orders.enumerate_positions(term), 14))
        values = [orders.embed_position(term, p) for p in positions]
        for (i, p), (j, q) in itertools.combinations(enumerate(positions), 2):
            want = orders.pos_cmp(term, p, q)
            got = (values[i] > values[j]) - (values[i] < values[j])
            assert want == got, f"{term}: {p} vs {q}"


def test_dense_embedding_between():
    for src in ("QQ", "cat(N,QQ)", "rev(cat(N,QQ,N))", "osum([QQ];N)"):
        out = orders.wo_classify(t(src))
        assert isinstance(out, NonScattered), src
        emb = out.embedding
        samples = [Fraction(k, 5) for k in range(-12, 13)]
        images = [emb.map(q) for q in samples]
        assert images == sorted(images) and len(set(images)) == len(images)
        # order density within budget: a third image between any two
        for a, b in zip(samples, samples[1:]):
            assert emb.map(a) < emb.map((a + b) / 2) < emb.map(b)


def test_embedding_lands_inside_the_copy():
    # images must interleave correctly with the scattered part
    term = t("cat(N,QQ)")
    out = orders.wo_classify(term)
    assert isinstance(out, NonScattered)
    nat_values = [
        orders.embed_position(term, (0, (k,))) for k in range(5)
    ]
    q_images = [out.embedding.map(Fraction(k)) for k in (-3, 0, 3)]
    assert max(nat_values) < min(q_images)  # the dense part sits above the (0,...) block
