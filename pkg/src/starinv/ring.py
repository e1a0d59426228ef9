"""Definitional predicates for rings with involution.

Everything here certifies witnesses; nothing constructs an inverse.
Any value with ``+``, ``-``, ``*``, unary ``-``, ``star()``,
``one_like()`` and exact equality can be checked, so dense exact
matrices and table-algebra elements both qualify.  Solvers live with
the concrete instances and hand their candidates to these checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable


class InvalidWitnessError(ValueError):
    """A claimed inverse witness fails its definitional equations."""


class NotAProjectionError(ValueError):
    """A value supplied as a projection is not self-adjoint idempotent."""


@runtime_checkable
class InverseEngine(Protocol):
    """Decides inverse existence for one concrete ring instance.

    ``mp`` returns the unique witness or None; ``drazin`` returns
    ``(witness, index)`` or None.  Engines never guess: a returned
    witness always passes the corresponding verifier.
    """

    @property
    def ring_id(self) -> str: ...

    @property
    def star_reducing(self) -> bool: ...

    def mp(self, x): ...

    def drazin(self, x): ...

    def serialize(self, x) -> str: ...


@dataclass(frozen=True)
class PenroseReport:
    """Outcome of the four defining equations for a candidate b of a:
    aba = a, bab = b, (ab)* = ab, (ba)* = ba."""

    eq1: bool
    eq2: bool
    eq3: bool
    eq4: bool

    @property
    def all(self) -> bool:
        return self.eq1 and self.eq2 and self.eq3 and self.eq4


@dataclass(frozen=True)
class DrazinReport:
    """Outcome of the three defining equations at index k:
    ab = ba, bab = b, a^(k+1) b = a^k."""

    commutes: bool
    inner: bool
    index_eq: bool
    k: int

    @property
    def valid(self) -> bool:
        return self.commutes and self.inner and self.index_eq


def element_power(a, k: int):
    """a**k by repeated multiplication; a**0 is the unit of a's ring."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return a.one_like()
    acc = a
    for _ in range(k - 1):
        acc = acc * a
    return acc


def verify_mp(a, cand) -> PenroseReport:
    """Check whether cand is the Moore-Penrose inverse of a.

    All four equations are evaluated with exact equality; ``report.all``
    is True exactly when cand certifies a as MP invertible.
    """
    ab = a * cand
    ba = cand * a
    return PenroseReport(
        eq1=ab * a == a,
        eq2=ba * cand == cand,
        eq3=ab.star() == ab,
        eq4=ba.star() == ba,
    )


def verify_drazin(a, cand, k: int) -> DrazinReport:
    """Check whether cand witnesses Drazin invertibility of a at index k."""
    if k < 0:
        raise ValueError("Drazin index must be nonnegative")
    ab = a * cand
    return DrazinReport(
        commutes=ab == cand * a,
        inner=cand * ab == cand,
        index_eq=element_power(a, k + 1) * cand == element_power(a, k),
        k=k,
    )


def is_projection(e) -> bool:
    """True iff e is idempotent and self-adjoint."""
    return e * e == e and e.star() == e


def is_ep(a, a_dag) -> bool:
    """True iff a commutes with its MP inverse.

    ``a_dag`` must actually be the MP inverse of a; otherwise the
    question is ill-posed and InvalidWitnessError is raised.
    """
    if not verify_mp(a, a_dag).all:
        raise InvalidWitnessError("a_dag is not the MP inverse of a")
    return a * a_dag == a_dag * a


class ProjectionPairContext:
    """A projection pair (p, q) with its derived elements cached.

    Caches a = pqp, b = pq(1-p), d = (1-p)q(1-p) and the complements
    1-p, 1-q, all computed once at construction.  Values are never
    mutated afterwards.
    """

    __slots__ = ("p", "q", "one", "p_bar", "q_bar", "a", "b", "d")

    def __init__(self, p, q):
        if not is_projection(p):
            raise NotAProjectionError("p is not a projection")
        if not is_projection(q):
            raise NotAProjectionError("q is not a projection")
        one = p.one_like()
        pq = p * q
        self.p = p
        self.q = q
        self.one = one
        self.p_bar = one - p
        self.q_bar = one - q
        self.a = pq * p
        self.b = pq - self.a
        self.d = self.p_bar * q * self.p_bar

    def complemented(self) -> "ProjectionPairContext":
        """The context for the complementary pair (1-p, 1-q)."""
        return ProjectionPairContext(self.p_bar, self.q_bar)

    def swapped(self) -> "ProjectionPairContext":
        """The context for the reversed pair (q, p)."""
        return ProjectionPairContext(self.q, self.p)
