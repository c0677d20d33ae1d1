"""Quasigroupoids: many-object IP loops with a partial product.

Walks through every builder: one-object loops, coarse/discrete groupoids,
action structures, the pair construction, and base reindexing, checking the
axioms and the derived identities on each.
"""

from nonassoc import (
    check_action_on_set,
    check_quasigroupoid,
    coarse_groupoid,
    cyclic_group,
    derived_identity_suite,
    discrete_groupoid,
    format_report,
    from_quasigroup_action,
    moufang_loop_12,
    pair_quasigroupoid,
    pullback_quasigroupoid,
    quasigroup_as_quasigroupoid,
)

# The two degenerate groupoids on a 2-point base.
coarse = coarse_groupoid(2)
print("coarse groupoid on 2 points:", coarse.n_arrows, "arrows", coarse.arrow_names)
print("inverse of (0,1):", coarse.arrow_name(coarse.inv[1]))
discrete = discrete_groupoid(2)
print("discrete groupoid on 2 points:", discrete.n_arrows, "arrows")

# A loop is a one-object quasigroupoid.
m12 = moufang_loop_12()
one_object = quasigroup_as_quasigroupoid(m12)
print("\none-object structure from the Moufang loop:", one_object.n_arrows, "arrows")

# An action of a loop on a set produces arrows (element, point).
z3 = cyclic_group(3)
translation = lambda a, x: (a + x) % 3
print("\nis translation an action?", check_action_on_set(z3, 3, translation).ok)
orbit = from_quasigroup_action(z3, 3, translation)
print("action structure:", orbit.n_arrows, "arrows over", orbit.n_objects, "objects")
print("arrow (1,0) runs 0 ->", orbit.tgt[3])

# Left translation of a nonassociative loop on itself is NOT an action:
bad = check_action_on_set(m12, 12, lambda a, x: m12.mul(a, x))
print("left translation of the Moufang loop is an action:", bad.ok)
print("first witness:", bad.violations[0].witness)

# The pair construction: arrows (a, x, y) between points, loop-labelled.
pairs = pair_quasigroupoid(cyclic_group(2), 2)
print("\npair structure on Z/2 and 2 points:", pairs.n_arrows, "arrows")

# Reindexing the base along a surjection: doubling one object of the coarse
# groupoid yields 9 arrows (2x2 + 2 + 2 + 1 over the four original arrows).
doubled = pullback_quasigroupoid(coarse, 3, [0, 0, 1])
print("doubled coarse groupoid:", doubled.n_arrows, "arrows")

# Every builder output passes the axiom checker and the derived-identity
# suite (endpoint laws, cancellation to identities, antimultiplicativity).
for name, q in [
    ("coarse", coarse),
    ("discrete", discrete),
    ("one-object m12", one_object),
    ("z3 translation", orbit),
    ("pairs", pairs),
    ("doubled", doubled),
]:
    assert check_quasigroupoid(q).ok and derived_identity_suite(q).ok
    print(f"{name}: axioms + derived identities OK")

print()
print(format_report(derived_identity_suite(coarse)))
