"""Walk through coloured mutation on a small 2-coloured triangle.

The starting quiver is *not* in the mutation class of the line (its
triangle has colour sums 3 and 3 instead of 1 and 5), yet every quiver
it mutates into is.  This also shows why mutation is not an involution
for m >= 2: three mutations at the same vertex do not return home.
"""
from cquivers import (
    ColouredQuiver,
    is_member,
    mutate_formula,
    mutate_power,
    mutate_steps,
    triangle_sums,
)

m = 2
# drawn arrows 3 -> 1 (0), 2 -> 1 (0), 2 -> 3 (1); skew partners implied
q = ColouredQuiver.from_arrows(
    m, 3, [(2, 0, 0), (0, 2, 2), (1, 0, 0), (0, 1, 2), (1, 2, 1), (2, 1, 1)]
)

print("start:", q)
print("triangle colour sums:", triangle_sums(q, 0, 1, 2), "(class members need 1 or 5)")
print("member of the A_3 class:", is_member(q).member)
print()

cur = q
for step in range(1, 5):
    nxt = mutate_steps(cur, 1)
    assert nxt == mutate_formula(cur, 1), "the two mutation implementations agree"
    print(f"mu_2^{step}:", nxt, "| member:", is_member(nxt).member)
    cur = nxt

print()
print("mu_2^3(q) == q ?", mutate_power(q, 1, 3) == q, "(no: q is outside the class)")

# inside the class the same power is always the identity
member = mutate_steps(q, 1)
print("for the member above, mu_j^3 is the identity at every vertex:",
      all(mutate_power(member, j, 3) == member for j in range(member.n)))
