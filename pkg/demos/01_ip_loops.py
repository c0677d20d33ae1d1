"""Finite IP loops: Cayley tables with two-sided inverse-property inverses.

Builds classical groups, doubles one into the smallest nonassociative
Moufang loop, and shows what the validators report along the way.
"""

from nonassoc import (
    check_quasigroup,
    chein_double,
    cyclic_group,
    derived_inverse_suite,
    format_report,
    is_associative,
    symmetric_group,
)

# Groups are the associative examples.  Element 0 is always the identity.
z5 = cyclic_group(5)
print("Z/5 table:", z5.table)
print("Z/5 associative:", is_associative(z5))

s3 = symmetric_group(3)
print("\nS3 elements (one-line notation):", s3.names)
print("S3 associative:", is_associative(s3))

# Doubling a nonabelian group produces a nonassociative loop in which every
# element still has a genuine two-sided inverse.
m12 = chein_double(s3)
print("\ndoubled S3 has order", m12.order)
ok, witness = is_associative(m12)
print("associative:", ok, "- first failing triple:", witness)
u, v, w = witness
print(
    "  i.e.",
    f"({m12.name(u)}*{m12.name(v)})*{m12.name(w)} =",
    m12.name(m12.mul(m12.mul(u, v), w)),
    "but",
    f"{m12.name(u)}*({m12.name(v)}*{m12.name(w)}) =",
    m12.name(m12.mul(u, m12.mul(v, w))),
)

# The validator recomputes inverses and confirms the loop laws exhaustively.
report = check_quasigroup(m12.table, m12.identity)
print("\nvalidator verdict:")
print(format_report(report))

# Inverses still behave like group inverses: involutive and antimultiplicative.
print(format_report(derived_inverse_suite(m12)))

# A broken table is rejected with a witness: row 1 fails the identity law.
broken = check_quasigroup([[0, 0], [1, 1]], 0)
print(format_report(broken))
