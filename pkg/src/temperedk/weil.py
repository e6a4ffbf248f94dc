"""Tempered parameters of the Weil groups of the real and complex field.

Over C every irreducible tempered parameter is a unitary character
``chi_{ell,t}(z) = (z/|z|)^ell |z|^{it}`` of the multiplicative group,
labeled by an integer winding number ``ell`` and a scalar ``t``.  Over R
the irreducibles come in two families: one-dimensional characters (a
sign twist ``eps`` in {0,1} together with a scalar ``t``) and the
two-dimensional summands induced from ``chi_{ell,t}``.  The labels
``ell`` and ``-ell`` give equivalent two-dimensional summands, and
``ell = 0`` degenerates into the sum of the two sign characters, so a
canonical two-dimensional summand always carries ``ell >= 1``.

A full parameter is a finite direct sum of irreducibles, kept as a
multiset.  All scalars are exact rationals (``fractions.Fraction``), so
every operation in this package is exact and equality is decidable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import SideMismatch

REAL = "R"
COMPLEX = "C"

Rational = Union[Fraction, int, str]


@dataclass(frozen=True)
class ComplexCharacter:
    """Unitary character of C^* with winding label ``ell`` and scalar ``t``."""

    ell: int
    t: Fraction

    side = COMPLEX
    dim = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", Fraction(self.t))


@dataclass(frozen=True)
class RealCharacter:
    """One-dimensional summand over R: sign twist ``eps`` in {0,1}, scalar ``t``."""

    eps: int
    t: Fraction

    side = REAL
    dim = 1

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps!r}")
        object.__setattr__(self, "t", Fraction(self.t))


@dataclass(frozen=True)
class RealDiscreteSummand:
    """Two-dimensional summand over R with winding label ``ell`` and scalar ``t``.

    Raw labels ``ell <= 0`` are accepted on input; ``canonical_form``
    rewrites ``-ell`` as ``ell`` and splits ``ell = 0`` into the two sign
    characters.  Canonical parameters only ever contain ``ell >= 1``.
    """

    ell: int
    t: Fraction

    side = REAL
    dim = 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", Fraction(self.t))


Summand = Union[ComplexCharacter, RealCharacter, RealDiscreteSummand]


def _summand_key(s: Summand):
    # total order: characters before two-dimensional summands,
    # then by (eps, t) resp. (ell, t)
    if isinstance(s, RealDiscreteSummand):
        return (1, s.ell, s.t)
    if isinstance(s, RealCharacter):
        return (0, s.eps, s.t)
    return (0, s.ell, s.t)


@dataclass(frozen=True)
class LParameter:
    """Finite direct sum of irreducible summands over one side (R or C).

    The ``canonical`` flag is metadata set by ``canonical_form`` and does
    not take part in equality; two parameters are structurally equal when
    their summand tuples agree.
    """

    side: str
    summands: tuple[Summand, ...]
    canonical: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.side not in (REAL, COMPLEX):
            raise ValueError(f"side must be {REAL!r} or {COMPLEX!r}, got {self.side!r}")
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise ValueError("a parameter needs at least one summand")
        for s in self.summands:
            if s.side != self.side:
                raise SideMismatch(f"summand {s!r} does not live over side {self.side!r}")

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    def __add__(self, other: "LParameter") -> "LParameter":
        if not isinstance(other, LParameter):
            return NotImplemented
        if self.side != other.side:
            raise SideMismatch("cannot sum parameters over different sides")
        return LParameter(self.side, self.summands + other.summands)


def real_parameter(*summands: Summand) -> LParameter:
    return LParameter(REAL, tuple(summands))


def complex_parameter(*summands: Summand) -> LParameter:
    return LParameter(COMPLEX, tuple(summands))


def direct_sum(parameters: Iterable[LParameter]) -> LParameter:
    """Concatenate parameters over a common side into one direct sum."""
    parts = list(parameters)
    if not parts:
        raise ValueError("direct_sum needs at least one parameter")
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def galois_conjugate(chi: ComplexCharacter) -> ComplexCharacter:
    """Precompose a character of C^* with complex conjugation: negates ell."""
    return ComplexCharacter(-chi.ell, chi.t)


def canonical_form(p: LParameter) -> LParameter:
    """Rewrite a parameter as its canonical multiset representative.

    Over R every two-dimensional summand ends up with label >= 1: a
    negative label is replaced by its absolute value and a label-0
    summand splits into RealCharacter(0, t) + RealCharacter(1, t).
    Summands are then sorted in the canonical total order.  Idempotent.
    """
    out: list[Summand] = []
    if p.side == REAL:
        for s in p.summands:
            if isinstance(s, RealDiscreteSummand):
                if s.ell == 0:
                    out.append(RealCharacter(0, s.t))
                    out.append(RealCharacter(1, s.t))
                else:
                    out.append(RealDiscreteSummand(abs(s.ell), s.t))
            else:
                out.append(s)
    else:
        out = list(p.summands)
    out.sort(key=_summand_key)
    return LParameter(p.side, tuple(out), canonical=True)


def equivalent(a: LParameter, b: LParameter) -> bool:
    """Whether two parameters are equivalent (equal canonical multisets)."""
    if a.side != b.side:
        raise SideMismatch("cannot compare parameters over different sides")
    return canonical_form(a).summands == canonical_form(b).summands


def decompose(p: LParameter) -> tuple[Summand, ...]:
    """Multiset of canonical irreducible summands, in canonical order."""
    return canonical_form(p).summands


def is_irreducible(p: LParameter) -> bool:
    return len(decompose(p)) == 1


def restrict_to_C(p: LParameter) -> LParameter:
    """Restrict a parameter of W_R to the index-two subgroup C^*.

    A sign character (eps, t) restricts to chi_{0, 2t} (the sign twist
    dies and the scalar doubles under the change of norm), and a
    two-dimensional summand with label ell restricts to the conjugate
    pair chi_{ell, t} + chi_{-ell, t}.
    """
    if p.side != REAL:
        raise SideMismatch("restrict_to_C expects a parameter over R")
    out: list[Summand] = []
    for s in decompose(p):
        if isinstance(s, RealCharacter):
            out.append(ComplexCharacter(0, 2 * s.t))
        else:
            out.append(ComplexCharacter(s.ell, s.t))
            out.append(ComplexCharacter(-s.ell, s.t))
    return canonical_form(LParameter(COMPLEX, tuple(out)))


def induce_to_R(chi: ComplexCharacter) -> LParameter:
    """Induce a character of C^* to W_R.

    For ell != 0 the induced parameter is irreducible, the
    two-dimensional summand with label |ell|.  For ell = 0 it splits
    into the two sign characters at scalar t/2, the normalization that
    makes restrict_to_C(induce_to_R(chi)) = chi + galois_conjugate(chi)
    hold exactly.
    """
    if chi.ell != 0:
        summands: tuple[Summand, ...] = (RealDiscreteSummand(abs(chi.ell), chi.t),)
    else:
        half = chi.t / 2
        summands = (RealCharacter(0, half), RealCharacter(1, half))
    return canonical_form(LParameter(REAL, summands))


def hom_dim(a: LParameter, b: LParameter) -> int:
    """Dimension of the space of intertwiners between two parameters.

    Both are semisimple, so this is the inner product of multiplicity
    vectors over canonical irreducible summands.
    """
    if a.side != b.side:
        raise SideMismatch("hom_dim expects parameters over a common side")
    mult_a = Counter(decompose(a))
    mult_b = Counter(decompose(b))
    return sum(m * mult_b[s] for s, m in mult_a.items())
