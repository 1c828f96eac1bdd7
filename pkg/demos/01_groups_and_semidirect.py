"""Build finite groups as multiplication tables and twist them together.

Walks through the cyclic and dihedral constructors, the exhaustive axiom
checker, and the semidirect product Z4 x| Z2 with the inversion action,
which turns out to be the dihedral group D4.
"""

from amalg import (
    check_group_axioms,
    element_order,
    find_isomorphism,
    inversion_action,
    make_cyclic,
    make_dihedral,
    semidirect,
    split_maps,
)

# Groups are plain multiplication tables over element indices 0..n-1.
z4 = make_cyclic(4)
print(f"{z4.label}: order {z4.order}, identity {z4.identity}")
for row in z4.mul:
    print("   ", row)

# The axiom checker re-proves associativity, identity, inverses, and
# generation by brute force; every constructor runs it or equivalent checks.
report = check_group_axioms(z4)
for record in report.records:
    print(f"    {record.check}: {'ok' if record.ok else record.witness}")

# Dihedral convention: index i < n is the rotation r^i, index n + i is r^i f.
d4 = make_dihedral(4)
orders = sorted(element_order(d4, x) for x in d4.elements())
print(f"\n{d4.label}: element orders {orders}")

# The inversion action of Z2 on Z4 sends x to -x.  Twisting the product by
# it glues Z4 and Z2 into a non-abelian group of order 8.
c2 = make_cyclic(2)
act = inversion_action(c2, z4)
sd = semidirect(z4, c2, act)
print(f"\nsemidirect product {sd.flat.label}: order {sd.flat.order}")

# (n1, c1)(n2, c2) = (n1 + (-1)^c1 n2, c1 + c2); pairs live at flat index
# n * |C| + c.
x = sd.encode(1, 1)
y = sd.encode(1, 0)
print(f"(1,1) * (1,0) = {tuple(sd.decode(sd.flat.mul[x][y]))}")

# The twisted product is isomorphic to D4; the search matches generators by
# element order and extends.
iso = find_isomorphism(sd.flat, d4)
print(f"isomorphic to {d4.label}: {iso is not None}")

# Every semidirect product splits: base embedding, projection, and section.
base, proj, sect = split_maps(sd)
print(f"projection o section on Z2: {[proj.image[sect.image[c]] for c in (0, 1)]}")
