"""Weak Hopf quasigroups from structure constants, exactly.

The free vector space on the arrows of a finite quasigroupoid carries a
product (zero on non-composable pairs), a group-like coproduct, and an
antipode from the inverse map.  The checker verifies the weak compatibility
axioms and the seven antipode laws as exact linear-map identities over the
rationals; there is no floating point anywhere.
"""

from nonassoc import (
    check_whq,
    coarse_groupoid,
    cyclic_group,
    derived_property_suite,
    format_report,
    is_cocommutative,
    is_commutative,
    is_hopf_quasigroup,
    magma_of_quasigroupoid,
    moufang_loop_12,
    nabla,
    projections,
    quasigroup_as_quasigroupoid,
)

kc = magma_of_quasigroupoid(coarse_groupoid(2))
print("dim K[coarse]:", kc.dim, " unit:", kc.unit)
print(format_report(check_whq(kc)))

# The target/source projections collapse an arrow onto the identity at its
# endpoints; their barred twins coincide because the coproduct is symmetric.
pi_l, pi_r, bar_l, bar_r = projections(kc)
print("projections of basis vector (0,1):", pi_l.cols[1], pi_r.cols[1])
print("barred versions agree:", pi_l == bar_l and pi_r == bar_r)

# Consequences of the axioms, re-proved on the basis: convolution unit laws,
# idempotency, antipode anti(co)multiplicativity, one-sided associativity of
# the projection images...
print("derived properties:", derived_property_suite(kc).ok)

# nabla projects the tensor square onto the composable part; the product law
# for morphisms runs through it.
grad = nabla(kc)
print("nabla idempotent:", grad @ grad == grad)

# Classification: a loop algebra is a (nonweak) Hopf quasigroup, the coarse
# structure is properly weak, and everything here is cocommutative.
km = magma_of_quasigroupoid(quasigroup_as_quasigroupoid(moufang_loop_12()))
print("\nK[Moufang 12]: whq =", check_whq(km).ok,
      " hopf =", is_hopf_quasigroup(km),
      " commutative =", is_commutative(km),
      " cocommutative =", is_cocommutative(km))
print("K[coarse]:     hopf =", is_hopf_quasigroup(kc))
kz2 = magma_of_quasigroupoid(quasigroup_as_quasigroupoid(cyclic_group(2)))
print("K[Z/2]:        hopf =", is_hopf_quasigroup(kz2))
