"""Walk through the bundled mixed f-ideals: verify, inspect the ABCD table, dualize."""
from fideal import (
    SelectionPolicy, construct_mixed_odd_a, f_ideal_report, load_fixture, minimalize, newton_dual,
)


def show(title, g):
    rep = f_ideal_report(g)
    print(f"{title}: n={g.n}, {len(g)} generators")
    print(f"  Stanley-Reisner {rep.sr.tail}   facet {rep.facet.tail}   f-ideal: {rep.f_ideal}")
    for r in rep.abcd.rows:
        if r.a or r.c:
            print(f"  degree {r.degree}: #A={r.a} #C={r.c}")
    return rep


# The 13-generator list printed for n = 7 misses one monomial of G2.
show("printed n=7 example", load_fixture("mixed_odd_n7_printed"))

# Running the construction itself (same G4 choice) gives 14 generators and an f-ideal.
c = construct_mixed_odd_a(3, SelectionPolicy.explicit([[2, 3, 5]]))
show("construction k=3", c.ideal)
print("  parts:", {k: len(v) for k, v in c.trace.parts.items()})

for name in ("block_odd_k3", "block_even_k4"):
    show(name, load_fixture(name))

vt = load_fixture("van_tuyl_printed")
m = minimalize(vt)
show(f"degree 3-5 example ({len(vt)} distinct, minimalized)", m)

d = newton_dual(c.ideal)
show("dual of construction k=3", d)
