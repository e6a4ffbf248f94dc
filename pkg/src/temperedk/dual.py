"""Connected components of the tempered duals of GL(n, R) and GL(n, C).

A component over R is indexed by a Levi class (q blocks of size 2, r
blocks of size 1, n = 2q + r), a multiset of q positive discrete-series
labels and a multiset of r sign characters.  Over C a component is a
multiset of n integer character labels.  Each component is a quotient
of a real vector space (one scalar per block) by the finite group
permuting equal labels; when that isotropy is nontrivial the component
is a closed cone and contributes nothing to K-theory.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Union

from .errors import InvalidN, InvalidTruncation, LabelMismatch

SIGN_ID = "id"
SIGN_SGN = "sgn"

SlotLabel = Union[int, str]


@dataclass(frozen=True)
class LeviClass:
    """Block structure 2^q 1^r of a standard Levi subgroup, n = 2q + r."""

    q: int
    r: int

    def __post_init__(self) -> None:
        if self.q < 0 or self.r < 0:
            raise ValueError("block counts must be nonnegative")
        if self.n < 1:
            raise InvalidN("a Levi class needs n >= 1")

    @property
    def n(self) -> int:
        return 2 * self.q + self.r


@dataclass(frozen=True)
class RealComponent:
    """Component of the tempered dual of GL(n, R).

    ``discrete`` holds the q discrete-series labels (sorted, each >= 1)
    and the sign characters are stored as counts, id_count + sgn_count = r.
    """

    discrete: tuple[int, ...]
    id_count: int = 0
    sgn_count: int = 0

    field = "R"

    def __post_init__(self) -> None:
        object.__setattr__(self, "discrete", tuple(sorted(self.discrete)))
        if any(ell < 1 for ell in self.discrete):
            raise ValueError("discrete-series labels must be >= 1")
        if self.id_count < 0 or self.sgn_count < 0:
            raise ValueError("sign counts must be nonnegative")
        if self.n < 1:
            raise InvalidN("a component needs n >= 1")

    @property
    def q(self) -> int:
        return len(self.discrete)

    @property
    def r(self) -> int:
        return self.id_count + self.sgn_count

    @property
    def n(self) -> int:
        return 2 * self.q + self.r

    @property
    def levi(self) -> LeviClass:
        return LeviClass(self.q, self.r)

    @property
    def dim(self) -> int:
        # one unramified scalar per block
        return self.q + self.r

    @property
    def signs(self) -> tuple[str, ...]:
        return (SIGN_ID,) * self.id_count + (SIGN_SGN,) * self.sgn_count


@dataclass(frozen=True)
class ComplexComponent:
    """Component of the tempered dual of GL(n, C): n character labels."""

    labels: tuple[int, ...]

    field = "C"

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))
        if not self.labels:
            raise InvalidN("a component needs n >= 1")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return self.n


Component = Union[RealComponent, ComplexComponent]


def component_sort_key(c: Component):
    """Deterministic total order on components, used for generator lists."""
    if isinstance(c, RealComponent):
        return ("R", len(c.discrete), c.discrete, c.sgn_count, c.id_count)
    return ("C", c.labels)


@dataclass(frozen=True)
class IsotropyDescriptor:
    """Cycle type of the finite group permuting equal labels of a component.

    ``factors`` lists the multiplicities >= 2; the group is the product
    of the corresponding symmetric groups.
    """

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))
        if any(m < 2 for m in self.factors):
            raise ValueError("isotropy factors must be >= 2")

    @property
    def trivial(self) -> bool:
        return not self.factors

    @property
    def order(self) -> int:
        out = 1
        for m in self.factors:
            out *= factorial(m)
        return out


@dataclass(frozen=True)
class TemperedPoint:
    """A tempered representation: a component plus one scalar per block.

    ``coords`` pairs each slot label with its scalar.  Raw points may
    list the slots in any order; ``canonicalize_point`` sorts them and
    checks that the labels match the component.
    """

    component: Component
    coords: tuple[tuple[SlotLabel, Fraction], ...]

    def __post_init__(self) -> None:
        fixed = []
        for label, t in self.coords:
            if isinstance(label, bool) or not isinstance(label, (int, str)):
                raise ValueError(f"bad slot label {label!r}")
            if isinstance(label, str) and label not in (SIGN_ID, SIGN_SGN):
                raise ValueError(f"bad sign label {label!r}")
            fixed.append((label, Fraction(t)))
        object.__setattr__(self, "coords", tuple(fixed))


def levi_classes(n: int) -> list[LeviClass]:
    """All Levi classes for GL(n), q descending from n // 2 to 0."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    return [LeviClass(q, n - 2 * q) for q in range(n // 2, -1, -1)]


def isotropy(c: Component) -> IsotropyDescriptor:
    """Isotropy of a generic point of the component (repeated-label data)."""
    factors = []
    if isinstance(c, RealComponent):
        factors.extend(m for m in Counter(c.discrete).values() if m >= 2)
        if c.id_count >= 2:
            factors.append(c.id_count)
        if c.sgn_count >= 2:
            factors.append(c.sgn_count)
    else:
        factors.extend(m for m in Counter(c.labels).values() if m >= 2)
    return IsotropyDescriptor(tuple(factors))


def is_cone(c: Component) -> bool:
    """Whether the component is a closed cone (nontrivial isotropy)."""
    return not isotropy(c).trivial


def enumerate_components_real(n: int, max_label: int) -> list[RealComponent]:
    """All components of the tempered dual of GL(n, R) with labels <= max_label.

    Deterministic order: Levi classes with q descending, discrete
    multisets lexicographic, then sign splits {id..id} .. {sgn..sgn}.
    """
    if max_label < 1:
        raise InvalidTruncation(f"max_label must be >= 1, got {max_label}")
    out = []
    for levi in levi_classes(n):
        for discrete in combinations_with_replacement(range(1, max_label + 1), levi.q):
            for id_count in range(levi.r, -1, -1):
                out.append(RealComponent(discrete, id_count, levi.r - id_count))
    return out


def enumerate_components_complex(n: int, max_label: int) -> list[ComplexComponent]:
    """All components for GL(n, C) with labels in [-max_label, max_label]."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if max_label < 0:
        raise InvalidTruncation(f"max_label must be >= 0, got {max_label}")
    return [
        ComplexComponent(labels)
        for labels in combinations_with_replacement(range(-max_label, max_label + 1), n)
    ]


def _coord_key(coord: tuple[SlotLabel, Fraction]):
    label, t = coord
    if isinstance(label, str):
        return (1, 0 if label == SIGN_ID else 1, t)
    return (0, label, t)


def canonicalize_point(p: TemperedPoint) -> TemperedPoint:
    """Sort the coords into canonical order after checking the labels.

    Discrete slots come first (by label, then scalar), sign slots after
    (id before sgn, then scalar).  Among equal labels the scalars end up
    nondecreasing, which picks one representative per isotropy orbit.
    Idempotent.
    """
    comp = p.component
    if isinstance(comp, RealComponent):
        expected = Counter(comp.discrete) + Counter(comp.signs)
    else:
        expected = Counter(comp.labels)
    got = Counter(label for label, _ in p.coords)
    if got != expected:
        raise LabelMismatch(
            f"coordinate labels {sorted(got.items(), key=str)} do not match component "
            f"slots {sorted(expected.items(), key=str)}"
        )
    return TemperedPoint(comp, tuple(sorted(p.coords, key=_coord_key)))


def component_of(p: TemperedPoint) -> Component:
    return p.component
