"""Linearization of a matched pair: the action maps as linear maps on the
tensor square, the pairing map and its idempotent, and the double cross
product magma-coalgebra carried by the composable pairs.

The carrier basis reuses the exact (a, h) enumeration of
`matched_pairs.dcp_pairs`, not a sub-basis of the ambient tensor space:
this keeps dimensions small and turns the canonical comparison with the
group-like structure on the combinatorial double cross product into a
literal coefficientwise equality (`verify_canonical_iso`).
"""

from __future__ import annotations

from .hopf import MagmaCoalgebra, check_whq_morphism, magma_of_quasigroupoid
from .linalg import LinearMap, vec_add_into, vec_equal
from .matched_pairs import (
    MatchedPair,
    check_matched_pair,
    dcp_pairs,
    double_cross_product,
)
from .reports import InvalidStructureError, StructureError, StructureReport


def _require_valid(mp: MatchedPair, check: bool) -> None:
    if check:
        report = check_matched_pair(mp)
        if not report.ok:
            raise InvalidStructureError(report)


def linearized_actions(mp: MatchedPair, check: bool = True) -> tuple[LinearMap, LinearMap]:
    """The two action tables as linear maps on K[H] (x) K[A]: composable
    pairs act, everything else is sent to zero."""
    _require_valid(mp, check)
    a, h = mp.a, mp.h
    na, nh = a.n_arrows, h.n_arrows

    def left_col(t):
        x, y = t // na, t % na
        return mp.phi_a(x, y)  # None (zero) when not composable

    def right_col(t):
        x, y = t // na, t % na
        return mp.phi_h(x, y)

    return (
        LinearMap.from_basis(nh * na, na, left_col),
        LinearMap.from_basis(nh * na, nh, right_col),
    )


def phi_map(mp: MatchedPair, check: bool = True) -> LinearMap:
    """h (x) a -> phiA(h,a) (x) phiH(h,a) on composable pairs, zero otherwise."""
    _require_valid(mp, check)
    a, h = mp.a, mp.h
    na, nh = a.n_arrows, h.n_arrows

    def col(t):
        x, y = t // na, t % na
        pa, ph = mp.phi_a(x, y), mp.phi_h(x, y)
        if pa is None or ph is None:
            return None
        return pa * nh + ph

    return LinearMap.from_basis(nh * na, na * nh, col)


def nabla_phi(mp: MatchedPair, check: bool = True) -> LinearMap:
    """Idempotent on K[A] (x) K[H] keeping exactly the composable tensors,
    whose image carries the double cross product."""
    _require_valid(mp, check)
    a, h = mp.a, mp.h
    na, nh = a.n_arrows, h.n_arrows

    def col(t):
        p, q = t // nh, t % nh
        return t if a.src[p] == h.tgt[q] else None

    return LinearMap.from_basis(na * nh, na * nh, col)


def bowtie_whq(mp: MatchedPair, check: bool = True) -> MagmaCoalgebra:
    """The double cross product weak Hopf quasigroup on the composable-pair
    basis: product (a,h)(b,g) = a.phiA(h,b) (x) phiH(h,b).g when (h,b) is
    composable and zero otherwise, unit the sum of the paired identities,
    group-like coproduct, counit one, antipode through the inverted actions.
    """
    _require_valid(mp, check)
    a, h = mp.a, mp.h
    pairs = dcp_pairs(mp)
    index = {pq: i for i, pq in enumerate(pairs)}
    n = len(pairs)

    def locate(p, q, context):
        if p is None or q is None or (p, q) not in index:
            raise StructureError(f"double cross product not closed at {context}")
        return index[(p, q)]

    def product_col(t):
        i, j = t // n, t % n
        (p, g), (b, q) = pairs[i], pairs[j]
        if h.src[g] != a.tgt[b]:
            return None
        left = a.compose(p, mp.phi_a(g, b))
        right = h.compose(mp.phi_h(g, b), q)
        return locate(left, right, ("product", pairs[i], pairs[j]))

    product = LinearMap.from_basis(n * n, n, product_col)
    coproduct = LinearMap.from_basis(n, n * n, lambda i: i * n + i)
    counit = LinearMap.from_basis(n, 1, lambda i: {0: 1})
    antipode = LinearMap.from_basis(
        n,
        n,
        lambda i: locate(
            mp.phi_a(h.inv[pairs[i][1]], a.inv[pairs[i][0]]),
            mp.phi_h(h.inv[pairs[i][1]], a.inv[pairs[i][0]]),
            ("antipode", pairs[i]),
        ),
    )
    unit = {locate(a.unit[x], h.unit[x], ("unit", x)): 1 for x in range(a.n_objects)}
    # same naming as the double cross product arrows, so emitted documents of
    # the two constructions agree byte for byte
    names = tuple(f"({a.arrow_name(p)},{h.arrow_name(q)})" for (p, q) in pairs)
    return MagmaCoalgebra(n, unit, product, counit, coproduct, antipode, names)


def canonical_iso(mp: MatchedPair, check: bool = True) -> LinearMap:
    """The basis bijection (a,g) -> a (x) g from the magma of the
    combinatorial double cross product to the linearized one.  Because both
    sides enumerate the same composable pairs, the map is the identity on
    indices; `verify_canonical_iso` certifies it is an isomorphism."""
    _require_valid(mp, check)
    return LinearMap.identity(len(dcp_pairs(mp)))


def verify_canonical_iso(mp: MatchedPair, check: bool = True) -> StructureReport:
    """Certify the canonical isomorphism: the map is bijective, satisfies
    the weak-Hopf-quasigroup morphism laws between the two constructions,
    and transports every structure constant onto its counterpart exactly
    (unit, product, counit, coproduct, antipode)."""
    _require_valid(mp, check)
    source = magma_of_quasigroupoid(double_cross_product(mp, check=False))
    target = bowtie_whq(mp, check=False)
    f = canonical_iso(mp, check=False)
    report = StructureReport(
        "canonical isomorphism",
        axioms=(
            "bijective",
            "coalg-counit", "coalg-coprod", "mkl1", "mkl2", "mkl3", "mkl4",
            "oracle-unit", "oracle-product", "oracle-counit",
            "oracle-coproduct", "oracle-antipode",
        ),
    )
    if source.dim != target.dim or f.rank() != source.dim:
        report.fail("bijective", (source.dim, target.dim))
    morphism = check_whq_morphism(f, source, target)
    for v in morphism.violations:
        report.fail(v.axiom, v.witness, v.detail)
    if not vec_equal(source.unit, target.unit):
        report.fail("oracle-unit", (), f"{source.unit} vs {target.unit}")
    for tag, left, right in (
        ("oracle-product", source.product, target.product),
        ("oracle-counit", source.counit, target.counit),
        ("oracle-coproduct", source.coproduct, target.coproduct),
        ("oracle-antipode", source.antipode, target.antipode),
    ):
        if left.dom != right.dom or left.cod != right.cod:
            report.fail(tag, (), "shape mismatch")
            continue
        for j in range(left.dom):
            if not vec_equal(left.cols[j], right.cols[j]):
                report.fail(tag, (j,), f"{left.cols[j]} vs {right.cols[j]}")
    return report


def module_law_report(mp: MatchedPair, check: bool = True) -> StructureReport:
    """The linearized actions are unital module structures: acting by the
    unit is the identity, and acting twice equals acting by a product."""
    _require_valid(mp, check)
    a, h = mp.a, mp.h
    na, nh = a.n_arrows, h.n_arrows
    phi_ka, phi_kh = linearized_actions(mp, check=False)
    unit_h = {h.unit[x]: 1 for x in range(h.n_objects)}
    unit_a = {a.unit[x]: 1 for x in range(a.n_objects)}
    mu_a = magma_of_quasigroupoid(a)
    mu_h = magma_of_quasigroupoid(h)
    report = StructureReport(
        "linearized action module laws",
        axioms=("left-unit", "left-assoc", "right-unit", "right-assoc"),
    )
    for y in range(na):
        image: dict = {}
        for x, c in unit_h.items():
            vec_add_into(image, phi_ka.cols[x * na + y], c)
        if not vec_equal(image, {y: 1}):
            report.fail("left-unit", (y,), f"phi(1,a)={image}")
    for x in range(nh):
        image = {}
        for y, c in unit_a.items():
            vec_add_into(image, phi_kh.cols[x * na + y], c)
        if not vec_equal(image, {x: 1}):
            report.fail("right-unit", (x,), f"phi(h,1)={image}")
    ident_a = LinearMap.identity(na)
    ident_h = LinearMap.identity(nh)
    left_nested = phi_ka @ ident_h.tensor(phi_ka)
    left_product = phi_ka @ mu_h.product.tensor(ident_a)
    if left_nested != left_product:
        report.fail("left-assoc", ())
    right_nested = phi_kh @ phi_kh.tensor(ident_a)
    right_product = phi_kh @ ident_h.tensor(mu_a.product)
    if right_nested != right_product:
        report.fail("right-assoc", ())
    return report
