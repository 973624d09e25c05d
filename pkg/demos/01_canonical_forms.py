"""Normalizing ideal expressions to their canonical forms.

Every expression over FIN, the power set, finite sums, omega-sums,
diagonal limit sums and the orthogonal collapses to exactly one of
P(a), Q(a), PQ(a).  The rank ladder starts at the power set (P(0)) and
the finite sets (Q(0) = FIN), and each omega-sum of a Q-layer steps the
rank by one.
"""

from idealforms import iso_check, normalize, parse_expr


def show(src: str) -> None:
    print(f"  {src:42} ->  {normalize(parse_expr(src))}")


print("The first rungs of the ladder:")
show("POW")
show("FIN")
show("omega(FIN)")                 # the omega-sum of finite-set layers
show("perp(omega(FIN))")
show("omega(perp(omega(FIN)))")    # the simplest pair of non-isomorphic duals
show("limsum(w)")                  # diagonal sum along the stages below w

print("\nAbsorption: higher rank swallows lower rank, equal ranks join:")
show("sum(P(w),Q(3))")
show("sum(P(2),Q(2))")
show("sum(Q(1),Q(1))")
show("mix(P(1),Q(2);omega(Q(0)))")

print("\nThe orthogonal is an involution that swaps the two pure kinds:")
show("perp(P(5))")
show("perp(perp(P(5)))")
show("perp(sum(P(2),Q(2)))")

print("\nIsomorphism is decided by comparing canonical forms:")
pairs = [
    ("P(1)", "Q(1)"),
    ("sum(P(2),Q(1))", "P(2)"),
    ("omega(Q(w))", "P(w+1)"),
]
for left, right in pairs:
    verdict = "isomorphic" if iso_check(parse_expr(left), parse_expr(right)) else "non-isomorphic"
    print(f"  {left:22} vs {right:12} {verdict}")
