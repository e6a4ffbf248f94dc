"""K-theory of the reduced C*-algebras of GL(n, R) and GL(n, C).

Each non-cone component of the tempered dual is a euclidean space and
contributes one free generator in the degree matching its dimension mod
2; cone components contribute nothing.  ``k_group`` realizes the two
graded pieces directly from the closed-form generator families:

* GL(2q, R): degree q mod 2 has one generator per q-element set of
  distinct positive labels (all blocks of size 2); the other degree has
  one generator per (q-1)-element set together with the sign pair
  {id, sgn}.
* GL(2q+1, R): degree (q+1) mod 2 has one generator per q-element set
  of distinct positive labels times a choice of sign character; the
  other degree vanishes.
* GL(n, C): degree n mod 2 has one generator per n-element set of
  distinct integer labels; the other degree vanishes.

Generator lists are truncated at a label bound so they stay finite; the
schema strings record the untruncated families.  ``k_bc_hom`` and
``k_ai_hom`` build the base-change and automorphic-induction maps on
K-theory, with rules defined label-wise so they extend beyond any
truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Union

from .dual import Component, ComplexComponent, RealComponent, component_sort_key, is_cone
from .errors import (
    DegreeMismatch,
    InvalidN,
    InvalidTruncation,
    RingMismatch,
    UnknownGenerator,
)
from .weil import COMPLEX, REAL

RING_U1 = "U(1)"
RING_Z2 = "Z/2Z"

TermInput = Union[Mapping[Component, int], Iterable[tuple[Component, int]]]


def _check_degree(degree: int) -> int:
    if degree not in (0, 1):
        raise DegreeMismatch(f"degree must be 0 or 1, got {degree!r}")
    return degree


@dataclass(frozen=True)
class KClass:
    """Integer combination of component generators in one degree.

    Terms are normalized on construction: coefficients of equal
    generators are combined, zero terms dropped, and the rest sorted by
    the component order, so structural equality is semantic equality.
    """

    degree: int
    terms: tuple[tuple[Component, int], ...] = ()

    def __post_init__(self) -> None:
        _check_degree(self.degree)
        acc: dict[Component, int] = {}
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        for gen, coeff in items:
            acc[gen] = acc.get(gen, 0) + int(coeff)
        normalized = tuple(
            sorted(
                ((gen, coeff) for gen, coeff in acc.items() if coeff != 0),
                key=lambda term: component_sort_key(term[0]),
            )
        )
        object.__setattr__(self, "terms", normalized)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, gen: Component) -> int:
        for g, coeff in self.terms:
            if g == gen:
                return coeff
        return 0

    def __add__(self, other: "KClass") -> "KClass":
        if not isinstance(other, KClass):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatch("cannot add classes of different degrees")
        return KClass(self.degree, self.terms + other.terms)

    def __neg__(self) -> "KClass":
        return KClass(self.degree, tuple((g, -c) for g, c in self.terms))

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "KClass":
        return KClass(self.degree, tuple((g, scalar * c) for g, c in self.terms))


@dataclass(frozen=True)
class GradedKGroup:
    """The two K-groups of one reduced group C*-algebra, truncated at a label bound."""

    field: str
    n: int
    max_label: int
    gens0: tuple[Component, ...]
    gens1: tuple[Component, ...]
    schema0: str
    schema1: str

    def generators(self, degree: int) -> tuple[Component, ...]:
        return (self.gens0, self.gens1)[_check_degree(degree)]

    def schema(self, degree: int) -> str:
        return (self.schema0, self.schema1)[_check_degree(degree)]

    def rank(self, degree: int) -> int:
        return len(self.generators(degree))

    def zero(self, degree: int) -> KClass:
        return KClass(_check_degree(degree))


def k_ranks_component(c: Component) -> tuple[int, int]:
    """(rank in degree 0, rank in degree 1) contributed by one component."""
    if is_cone(c):
        return (0, 0)
    return (1, 0) if c.dim % 2 == 0 else (0, 1)


def _sorted_components(gens: Iterable[Component]) -> tuple[Component, ...]:
    return tuple(sorted(gens, key=component_sort_key))


def k_group(field_name: str, n: int, max_label: int) -> GradedKGroup:
    """Both K-groups for GL(n) over the named field, labels bounded by max_label."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if max_label < 1:
        raise InvalidTruncation(f"max_label must be >= 1, got {max_label}")
    labels = range(1, max_label + 1)
    if field_name == REAL:
        if n % 2 == 0:
            q = n // 2
            main = _sorted_components(
                RealComponent(c) for c in combinations(labels, q)
            )
            pair = _sorted_components(
                RealComponent(c, 1, 1) for c in combinations(labels, q - 1)
            )
            schema_main = (
                f"free abelian, one generator per {q}-element set of distinct "
                f"positive discrete labels (r = 0 components)"
            )
            schema_pair = (
                f"free abelian, one generator per {q - 1}-element set of distinct "
                f"positive discrete labels with the sign pair {{id, sgn}} (r = 2 components)"
            )
            if q % 2 == 0:
                return GradedKGroup(field_name, n, max_label, main, pair, schema_main, schema_pair)
            return GradedKGroup(field_name, n, max_label, pair, main, schema_pair, schema_main)
        q = (n - 1) // 2
        gens = []
        for c in combinations(labels, q):
            gens.append(RealComponent(c, 1, 0))
            gens.append(RealComponent(c, 0, 1))
        gens = _sorted_components(gens)
        schema = (
            f"free abelian, one generator per {q}-element set of distinct positive "
            f"discrete labels and a sign character id or sgn (r = 1 components)"
        )
        if (q + 1) % 2 == 0:
            return GradedKGroup(field_name, n, max_label, gens, (), schema, "0")
        return GradedKGroup(field_name, n, max_label, (), gens, "0", schema)
    if field_name == COMPLEX:
        gens = _sorted_components(
            ComplexComponent(c)
            for c in combinations(range(-max_label, max_label + 1), n)
        )
        schema = (
            f"free abelian, one generator per {n}-element set of distinct integer "
            f"labels (components with trivial isotropy)"
        )
        if n % 2 == 0:
            return GradedKGroup(field_name, n, max_label, gens, (), schema, "0")
        return GradedKGroup(field_name, n, max_label, (), gens, "0", schema)
    raise ValueError(f"field must be {REAL!r} or {COMPLEX!r}, got {field_name!r}")


@dataclass(frozen=True)
class KHomomorphism:
    """Graded-group map given by a label-wise rule on domain generators."""

    name: str
    domain: GradedKGroup
    codomain: GradedKGroup
    rule: Callable[[int, Component], KClass] = field(compare=False, repr=False)

    def on_generator(self, degree: int, gen: Component) -> KClass:
        if gen not in self.domain.generators(_check_degree(degree)):
            raise UnknownGenerator(f"{gen!r} is not a degree-{degree} domain generator")
        image = self.rule(degree, gen)
        if image.degree != degree:
            raise DegreeMismatch("homomorphism rule must preserve the degree")
        return image


def apply_hom(h: KHomomorphism, x: KClass) -> KClass:
    """Image of a K-class, term by term; every term must be a domain generator."""
    out = KClass(x.degree)
    for gen, coeff in x.terms:
        out = out + coeff * h.on_generator(x.degree, gen)
    return out


def k_bc_hom(n: int, max_label: int) -> KHomomorphism:
    """Base change on K-theory: K of GL(n, C) to K of GL(n, R).

    Zero for n > 1.  For n = 1 the only nonzero values are in degree 1,
    where the label-0 generator goes to the sum of the id and sgn
    generators and every other character generator goes to 0.
    """
    domain = k_group(COMPLEX, n, max_label)
    codomain = k_group(REAL, n, max_label)
    if n == 1:
        target = KClass(1, ((RealComponent((), 1, 0), 1), (RealComponent((), 0, 1), 1)))

        def rule(degree: int, gen: Component) -> KClass:
            if degree == 1 and isinstance(gen, ComplexComponent) and gen.labels == (0,):
                return target
            return KClass(degree)

    else:

        def rule(degree: int, gen: Component) -> KClass:
            return KClass(degree)

    return KHomomorphism("base-change", domain, codomain, rule)


def k_ai_hom(n: int, max_label: int) -> KHomomorphism:
    """Automorphic induction on K-theory: K of GL(2n, R) to K of GL(n, C).

    In degree n mod 2 the generator made of n distinct discrete labels
    goes to the complex generator with the same labels; the sign-pair
    family in the other degree goes to 0.
    """
    domain = k_group(REAL, 2 * n, max_label)
    codomain = k_group(COMPLEX, n, max_label)

    def rule(degree: int, gen: Component) -> KClass:
        if degree == n % 2 and isinstance(gen, RealComponent) and gen.r == 0:
            return KClass(degree, ((ComplexComponent(gen.discrete), 1),))
        return KClass(degree)

    return KHomomorphism("automorphic-induction", domain, codomain, rule)


@dataclass(frozen=True)
class RepRingElement:
    """Element of a character ring: R(U(1)) with integer labels, or
    R(Z/2Z) with labels "1" (trivial) and "eps" (sign)."""

    ring: str
    coeffs: tuple[tuple[Union[int, str], int], ...] = ()

    def __post_init__(self) -> None:
        if self.ring not in (RING_U1, RING_Z2):
            raise RingMismatch(f"unknown ring {self.ring!r}")
        acc: dict[Union[int, str], int] = {}
        items = self.coeffs.items() if isinstance(self.coeffs, Mapping) else self.coeffs
        for label, coeff in items:
            self._check_label(label)
            acc[label] = acc.get(label, 0) + int(coeff)
        normalized = tuple(
            sorted(
                ((label, coeff) for label, coeff in acc.items() if coeff != 0),
                key=self._label_key,
            )
        )
        object.__setattr__(self, "coeffs", normalized)

    def _check_label(self, label) -> None:
        if self.ring == RING_U1:
            if isinstance(label, bool) or not isinstance(label, int):
                raise RingMismatch(f"R(U(1)) labels are integers, got {label!r}")
        elif label not in ("1", "eps"):
            raise RingMismatch(f'R(Z/2Z) labels are "1" or "eps", got {label!r}')

    def _label_key(self, item):
        label = item[0]
        return (0, label) if self.ring == RING_U1 else (0, 0 if label == "1" else 1)

    def coefficient(self, label) -> int:
        for lab, coeff in self.coeffs:
            if lab == label:
                return coeff
        return 0

    def __add__(self, other: "RepRingElement") -> "RepRingElement":
        if not isinstance(other, RepRingElement):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatch("cannot add elements of different rings")
        return RepRingElement(self.ring, self.coeffs + other.coeffs)

    def __rmul__(self, scalar: int) -> "RepRingElement":
        return RepRingElement(self.ring, tuple((l, scalar * c) for l, c in self.coeffs))


def repring_bc(x: RepRingElement) -> RepRingElement:
    """Restriction map R(U(1)) to R(Z/2Z) underlying base change for n = 1.

    The trivial character (label 0) restricts to 1 + eps; every other
    character restricts to 0.  Matches k_bc_hom(1) under the dictionary
    label ell = character generator, 1 = id, eps = sgn.
    """
    if x.ring != RING_U1:
        raise RingMismatch("repring_bc expects an element of R(U(1))")
    c0 = x.coefficient(0)
    return RepRingElement(RING_Z2, (("1", c0), ("eps", c0)))
