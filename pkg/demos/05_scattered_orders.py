"""Scattered linear orders and their well-ordered-subset ideals.

Orders built from the naturals by reversal and sums map onto the same
canonical family: reversal is the orthogonal and sums are direct sums.
A term containing a copy of the rationals is not scattered; it yields a
dense order embedding instead of a form.
"""

from fractions import Fraction

from idealforms import parse_order, rationalize, wo_classify, wo_self_dual
from idealforms.orders import NonScattered

for src in ("N", "rev(N)", "osum([];rev(N))", "cat(N,rev(N))",
            "rev(osum([];rev(N)))", "osum([cat(N,N)];rev(osum([];rev(N))))"):
    print(f"  {src:36} {wo_classify(parse_order(src))}")

print("\nReversal classifies to the orthogonal:")
for src in ("N", "osum([];rev(N))", "cat(N,rev(N),N)"):
    rev, out = wo_self_dual(parse_order(src))
    print(f"  reverse of {src:22} is {str(rev):34} -> {out}")

print("\nEmbedding orders into the rationals (first elements, enumeration order):")
for src in ("N", "rev(N)", "cat(N,rev(N))", "osum([];N)"):
    values = ", ".join(str(v) for v in rationalize(parse_order(src), 6))
    print(f"  {src:16} {values}")

print("\nA dense atom anywhere makes the order non-scattered:")
out = wo_classify(parse_order("cat(N,QQ)"))
assert isinstance(out, NonScattered)
samples = [Fraction(k, 2) for k in range(-4, 5)]
images = [out.embedding.map(q) for q in samples]
print("  cat(N,QQ) ->", out)
print("  dense images of -2..2:", ", ".join(str(v) for v in images))
print("  strictly increasing:", images == sorted(set(images)))
