"""Pure f-ideals in degrees 3, 4, 5 from residue-class block families."""
import time

from fideal import SelectionPolicy, StructurallyImpossible, construct_pure, is_f_ideal, newton_dual

for d, n in ((3, 9), (3, 10), (4, 16), (4, 17), (5, 25)):
    t0 = time.perf_counter()
    c = construct_pure(d, n)
    secs = time.perf_counter() - t0
    parts = {k: len(v) for k, v in c.trace.parts.items()}
    print(f"d={d} n={n}: {len(c.ideal)} generators in {secs:.2f} s")
    print(f"  parts {parts}")
    for note in c.trace.notes:
        print(f"  note: {note}")

# The free step can be drawn at random; the result is still perfect.
a = construct_pure(4, 16, SelectionPolicy.seeded(1)).ideal
b = construct_pure(4, 16).ideal
print("seeded differs from lex:", a != b, " both f-ideals:", is_f_ideal(a) and is_f_ideal(b))

# Complementary duals land in degree n - d.
dual = newton_dual(construct_pure(3, 9).ideal)
print("dual of (3,9): degrees", dual.degrees, "f-ideal:", is_f_ideal(dual))

try:
    construct_pure(4, 20)
except StructurallyImpossible as exc:
    print("(4,20):", exc)
