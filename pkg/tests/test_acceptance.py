"""Acceptance suite: one test per criterion, all comparisons exact.

Each test ends by printing one ``[PASS] criterion NN`` line; a pytest
failure on a test is the corresponding fail line.  Run with

    pytest tests/test_acceptance.py -v -s
"""

import random
from fractions import Fraction as F
from math import comb

from temperedk import (
    COMPLEX,
    REAL,
    RING_U1,
    RING_Z2,
    ComplexCharacter,
    ComplexComponent,
    KClass,
    LParameter,
    RealCharacter,
    RealComponent,
    RealDiscreteSummand,
    RepRingElement,
    TemperedPoint,
    apply_hom,
    auto_induce_point,
    base_change_point,
    canonical_form,
    canonicalize_point,
    complex_parameter,
    component_of,
    component_sort_key,
    decompose,
    direct_sum,
    enumerate_components_complex,
    enumerate_components_real,
    equivalent,
    galois_conjugate,
    hom_dim,
    induce_to_R,
    is_cone,
    k_ai_hom,
    k_bc_hom,
    k_group,
    llc_complex,
    llc_real,
    repring_bc,
    restrict_to_C,
)


def _ok(num, text):
    print(f"[PASS] criterion {num:02d}: {text}")


# randomized inputs (seeded, exact rationals)

def _random_rational(rng):
    return F(rng.randint(-24, 24), rng.randint(1, 12))


def _random_real_parameter(rng, max_n=5):
    n = rng.randint(1, max_n)
    summands = []
    remaining = n
    while remaining > 0:
        if remaining >= 2 and rng.random() < 0.5:
            summands.append(RealDiscreteSummand(rng.randint(-6, 6), _random_rational(rng)))
            remaining -= 2
        else:
            summands.append(RealCharacter(rng.randint(0, 1), _random_rational(rng)))
            remaining -= 1
    rng.shuffle(summands)
    return LParameter(REAL, tuple(summands))


def _random_complex_parameter(rng, max_n=4):
    n = rng.randint(1, max_n)
    return LParameter(
        COMPLEX,
        tuple(ComplexCharacter(rng.randint(-6, 6), _random_rational(rng)) for _ in range(n)),
    )


def _random_component(rng):
    if rng.random() < 0.5:
        while True:
            discrete = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 3)))
            id_count, sgn_count = rng.randint(0, 3), rng.randint(0, 3)
            if 2 * len(discrete) + id_count + sgn_count >= 1:
                return RealComponent(discrete, id_count, sgn_count)
    return ComplexComponent(tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 4))))


def _random_raw_point(rng):
    comp = _random_component(rng)
    if isinstance(comp, RealComponent):
        labels = list(comp.discrete) + list(comp.signs)
    else:
        labels = list(comp.labels)
    coords = [(label, _random_rational(rng)) for label in labels]
    rng.shuffle(coords)
    return TemperedPoint(comp, tuple(coords))


def _kgroup_by_enumeration(field_name, n, max_label):
    # independent brute-force pipeline
    if field_name == "R":
        comps = enumerate_components_real(n, max_label)
    else:
        comps = enumerate_components_complex(n, max_label)
    kept = [c for c in comps if not is_cone(c)]
    g0 = tuple(sorted((c for c in kept if c.dim % 2 == 0), key=component_sort_key))
    g1 = tuple(sorted((c for c in kept if c.dim % 2 == 1), key=component_sort_key))
    return g0, g1


# criteria

def test_c01_gl1_real_k_groups():
    for max_label in (1, 4, 7):
        group = k_group("R", 1, max_label)
        assert group.rank(0) == 0
        assert group.generators(1) == (RealComponent((), 1, 0), RealComponent((), 0, 1))
    _ok(1, "GL(1,R): K^1 free of rank 2 on {id} and {sgn}, K^0 = 0")


def test_c02_gl2_real_k_groups():
    for max_label in range(1, 7):
        group = k_group("R", 2, max_label)
        assert group.generators(1) == tuple(
            RealComponent((ell,)) for ell in range(1, max_label + 1)
        )
        assert group.generators(0) == (RealComponent((), 1, 1),)
    _ok(2, "GL(2,R): K^1 one generator per discrete label, K^0 = Z on {id,sgn}")


def test_c03_gl3_real_k_groups():
    for max_label in range(1, 7):
        group = k_group("R", 3, max_label)
        assert group.rank(1) == 0
        want = [
            comp
            for ell in range(1, max_label + 1)
            for comp in (RealComponent((ell,), 1, 0), RealComponent((ell,), 0, 1))
        ]
        assert group.generators(0) == tuple(sorted(want, key=component_sort_key))
        assert group.rank(0) == 2 * max_label
    _ok(3, "GL(3,R): K^0 of rank 2L on (discrete label, sign) pairs, K^1 = 0")


def test_c04_real_counts_match_theorems_and_oracle():
    for n in (4, 5, 6):
        q = n // 2
        for max_label in (3, 4, 5, 6):
            group = k_group("R", n, max_label)
            want = _kgroup_by_enumeration("R", n, max_label)
            assert (group.generators(0), group.generators(1)) == want
            if n % 2 == 0:
                assert group.rank(q % 2) == comb(max_label, q)
                assert group.rank((q + 1) % 2) == comb(max_label, q - 1)
            else:
                assert group.rank((q + 1) % 2) == 2 * comb(max_label, q)
                assert group.rank(q % 2) == 0
    _ok(4, "GL(4..6,R), L=3..6: generator families equal the brute-force oracle and binomial counts")


def test_c05_complex_counts():
    for n in range(1, 5):
        for max_label in range(1, 4):
            group = k_group("C", n, max_label)
            assert group.rank(n % 2) == comb(2 * max_label + 1, n)
            assert group.rank((n + 1) % 2) == 0
    _ok(5, "GL(n,C), n<=4, L<=3: one degree of rank C(2L+1,n), the other zero")


def test_c06_base_change_diagram_500_parameters():
    rng = random.Random(60406)
    for _ in range(500):
        p = _random_real_parameter(rng)
        assert base_change_point(llc_real(p)) == llc_complex(restrict_to_C(p))
    _ok(6, "500 random real parameters (n<=5): base change commutes with the correspondence")


def test_c07_auto_induce_diagram_500_parameters():
    rng = random.Random(70507)
    for _ in range(500):
        p = _random_complex_parameter(rng)
        induced = direct_sum([induce_to_R(chi) for chi in decompose(p)])
        assert auto_induce_point(llc_complex(p)) == llc_real(induced)
    _ok(7, "500 random complex parameters (n<=4): induction commutes with the correspondence")


def test_c08_frobenius_reciprocity_grid():
    scalars = (F(0), F(1), F(1, 2))
    grid = [ComplexCharacter(ell, t) for ell in range(-5, 6) for t in scalars]
    for c1 in grid:
        ind1 = induce_to_R(c1)
        as_param = complex_parameter(c1)
        for c2 in grid:
            ind2 = induce_to_R(c2)
            assert hom_dim(ind1, ind2) == hom_dim(as_param, restrict_to_C(ind2))
            want = c1 == c2 or c1 == galois_conjugate(c2)
            assert equivalent(ind1, ind2) == want
    _ok(8, "Frobenius reciprocity and the induced-equivalence criterion on the |ell|<=5 grid")


def test_c09_base_change_on_k_theory():
    h = k_bc_hom(1, 10)
    image = apply_hom(h, KClass(1, ((ComplexComponent((0,)), 1),)))
    assert image == KClass(1, ((RealComponent((), 1, 0), 1), (RealComponent((), 0, 1), 1)))
    for ell in range(1, 11):
        for label in (ell, -ell):
            x = KClass(1, ((ComplexComponent((label,)), 1),))
            assert apply_hom(h, x).is_zero
    for n in range(2, 6):
        hv = k_bc_hom(n, 5)
        for degree in (0, 1):
            for gen in hv.domain.generators(degree):
                assert hv.on_generator(degree, gen).is_zero
    # structural counterpart: images of non-cone components are cones or gain dimension
    for n in range(2, 6):
        for comp in enumerate_components_real(n, 5):
            if is_cone(comp):
                continue
            labels = list(comp.discrete) + list(comp.signs)
            pt = TemperedPoint(comp, tuple((lab, F(i)) for i, lab in enumerate(labels)))
            image = component_of(base_change_point(pt))
            assert is_cone(image) or image.dim > comp.dim
    _ok(9, "K(base change): Delta o Pr for n=1, zero for n=2..5, with the cone/dimension mechanism")


def test_c10_auto_induce_on_k_theory():
    for n in (1, 2, 3):
        h = k_ai_hom(n, 5)
        degree = n % 2
        images = []
        for gen in h.domain.generators(degree):
            image = h.on_generator(degree, gen)
            assert image == KClass(degree, ((ComplexComponent(gen.discrete), 1),))
            images.append(image.terms[0][0])
        assert len(set(images)) == len(images)
        positives = [
            c for c in h.codomain.generators(degree) if all(l >= 1 for l in c.labels)
        ]
        assert sorted(images, key=component_sort_key) == positives
        for gen in h.domain.generators(1 - degree):
            assert h.on_generator(1 - degree, gen).is_zero
    h1 = k_ai_hom(1, 10)
    for ell in range(1, 11):
        got = apply_hom(h1, KClass(1, ((RealComponent((ell,)), 1),)))
        assert got == KClass(1, ((ComplexComponent((ell,)), 1),))
    _ok(10, "K(induction), n<=3: label-preserving bijection onto positive generators, zero elsewhere")


def test_c11_repring_dictionary():
    assert repring_bc(RepRingElement(RING_U1, ((0, 1),))) == RepRingElement(
        RING_Z2, (("1", 1), ("eps", 1))
    )
    for ell in (-9, -2, 1, 5, 9):
        assert repring_bc(RepRingElement(RING_U1, ((ell, 1),))).coeffs == ()
    h = k_bc_hom(1, 9)
    id_gen, sgn_gen = RealComponent((), 1, 0), RealComponent((), 0, 1)
    for ell in range(-9, 10):
        image = apply_hom(h, KClass(1, ((ComplexComponent((ell,)), 1),)))
        ring_image = repring_bc(RepRingElement(RING_U1, ((ell, 1),)))
        assert image.coefficient(id_gen) == ring_image.coefficient("1")
        assert image.coefficient(sgn_gen) == ring_image.coefficient("eps")
    _ok(11, "character-ring base change matches k_bc_hom(1) under the generator dictionary")


def test_c12_canonicalization_randomized():
    rng = random.Random(121212)
    for _ in range(1000):
        if rng.random() < 0.5:
            p = _random_real_parameter(rng)
        else:
            p = _random_complex_parameter(rng)
        c = canonical_form(p)
        assert canonical_form(c) == c
    for _ in range(1000):
        pt = _random_raw_point(rng)
        canon = canonicalize_point(pt)
        assert canonicalize_point(canon) == canon
        # full slot shuffle
        coords = list(pt.coords)
        rng.shuffle(coords)
        assert canonicalize_point(TemperedPoint(pt.component, tuple(coords))) == canon
        # scalar permutation within equal labels
        grouped = {}
        for label, t in pt.coords:
            grouped.setdefault(label, []).append(t)
        regrouped = []
        for label, ts in grouped.items():
            rng.shuffle(ts)
            regrouped.extend((label, t) for t in ts)
        assert canonicalize_point(TemperedPoint(pt.component, tuple(regrouped))) == canon
    _ok(12, "1000 random parameters and points: canonicalization idempotent and orbit invariant")
