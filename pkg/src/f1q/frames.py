"""State frames over a level-l monoid field: vectors, the partial standard
form, orthogonality, perp spaces, projective rays, and tensor products.

A state is any m-tuple of level-l elements.  Because the scalars have no
addition, the standard form is partial: it is defined only when at most one
summand is nonzero, and that partiality is modelled as an explicit
``FormValue`` variant rather than an exception, so orthogonality stays a
total predicate.

Tensor products are row-major: entry (i, j) of x (x) y lands at flat index
i * dim(y) + j.  Every index convention downstream (operator Kronecker
products, the deletion operator's kept positions) assumes this flattening.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import F1Element, InvolutionSpec, parse_element, unit, zero

__all__ = [
    "StateVector",
    "FormValue",
    "PerpSpace",
    "ProjectiveRay",
    "state",
    "zero_state",
    "basis_state",
    "parse_state",
    "standard_form",
    "orthogonal",
    "perp_space",
    "ray_of",
    "rays_equal",
    "enumerate_vectors",
    "enumerate_rays",
    "simple_rays",
    "ray_count",
    "tensor",
]

_STATE_RE = re.compile(r"^\((?P<body>[^)]*)\)@(?P<level>\d+)$")


@dataclass(frozen=True)
class StateVector:
    """An m-tuple of level-l elements; the all-zero tuple is representable
    but is not a state (rays and perp spaces reject it)."""

    entries: tuple[F1Element, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("state vectors must have dimension >= 1")
        level = entries[0].order
        if any(e.order != level for e in entries):
            raise ValueError("all entries of a state vector must share one level")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def order(self) -> int:
        return self.entries[0].order

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[F1Element]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> F1Element:
        return self.entries[i]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e.is_unit)

    def cosupport(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e.is_zero)

    @property
    def is_zero(self) -> bool:
        return not self.support()

    @property
    def is_simple(self) -> bool:
        return len(self.support()) == 1

    def scale(self, s: F1Element) -> "StateVector":
        if not s.is_unit:
            raise ValueError("states scale by units only")
        return StateVector(tuple(s * e for e in self.entries))

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + f")@{self.order}"


def state(exps: Sequence[int | None], l: int) -> StateVector:
    """Build a vector from exponents, with None marking zero entries."""
    return StateVector(tuple(zero(l) if e is None else unit(e, l) for e in exps))


def zero_state(m: int, l: int) -> StateVector:
    return StateVector(tuple(zero(l) for _ in range(m)))


def basis_state(i: int, m: int, l: int, exp: int = 0) -> StateVector:
    """The simple point with w^exp at index i and zeros elsewhere."""
    if not 0 <= i < m:
        raise ValueError(f"index {i} out of range for dimension {m}")
    return StateVector(tuple(unit(exp, l) if j == i else zero(l) for j in range(m)))


def parse_state(text: str) -> StateVector:
    """Parse the text format ``(e1,...,em)@l`` with entries ``0`` or ``w^k``."""
    match = _STATE_RE.match(text.strip())
    if not match:
        raise ValueError(f"bad state literal {text!r}")
    l = int(match["level"])
    tokens = match["body"].split(",")
    return StateVector(tuple(parse_element(t, l) for t in tokens))


@dataclass(frozen=True)
class FormValue:
    """Result of the partial standard form: a defined element or Undefined.

    Undefined arises exactly when two or more summands are nonzero, i.e.
    when the supports overlap in two or more places.
    """

    value: F1Element | None

    @property
    def is_defined(self) -> bool:
        return self.value is not None

    @classmethod
    def defined(cls, value: F1Element) -> "FormValue":
        return cls(value)

    @classmethod
    def undefined(cls) -> "FormValue":
        return cls(None)

    def __str__(self) -> str:
        return "undefined" if self.value is None else str(self.value)


def _check_compatible(x: StateVector, y: StateVector) -> None:
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if x.order != y.order:
        raise ValueError(f"level mismatch: {x.order} vs {y.order}")


def _check_sigma(sigma: InvolutionSpec | None, level: int) -> None:
    if sigma is None:
        return
    if not sigma.valid:
        raise ValueError(f"({sigma.m}, {sigma.r}) is not a valid involution")
    if sigma.m != level:
        raise ValueError(f"involution lives at level {sigma.m}, states at level {level}")


def standard_form(
    x: StateVector, y: StateVector, sigma: InvolutionSpec | None = None
) -> FormValue:
    """The partial sesquilinear form sum_i sigma(x_i) y_i.

    With at most one nonzero summand the sum needs no addition: zero
    summands give Defined(0), one gives that term, two or more give
    Undefined.  ``sigma=None`` is the identity (the degenerate involution of
    the level-2 theory, which admits no nontrivial one).
    """
    _check_compatible(x, y)
    _check_sigma(sigma, x.order)
    terms = []
    for xi, yi in zip(x, y):
        if xi.is_unit and yi.is_unit:
            terms.append((sigma(xi) if sigma else xi) * yi)
            if len(terms) > 1:
                return FormValue.undefined()
    return FormValue.defined(terms[0] if terms else zero(x.order))


def orthogonal(x: StateVector, y: StateVector) -> bool:
    """True iff the supports are disjoint; equivalently the form is Defined(0)."""
    _check_compatible(x, y)
    return not set(x.support()) & set(y.support())


@dataclass(frozen=True)
class PerpSpace:
    """The orthogonal complement of a nonzero vector.

    Membership depends only on supports: y is in x-perp iff supp(y) is
    contained in the cosupport of x, so the complement is a frame of
    dimension |cosupp(x)| holding (l+1)^dim vectors including the zero
    vector.
    """

    of: StateVector
    free_indices: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.free_indices)

    @property
    def simple_basis(self) -> tuple[StateVector, ...]:
        return tuple(basis_state(i, self.of.dim, self.of.order) for i in self.free_indices)

    def contains(self, y: StateVector) -> bool:
        _check_compatible(self.of, y)
        return set(y.support()) <= set(self.free_indices)

    @property
    def vector_count(self) -> int:
        return (self.of.order + 1) ** self.dimension

    def vectors(self) -> Iterator[StateVector]:
        free = set(self.free_indices)
        for v in enumerate_vectors(self.of.dim, self.of.order, include_zero=True):
            if set(v.support()) <= free:
                yield v


def perp_space(x: StateVector) -> PerpSpace:
    if x.is_zero:
        raise ValueError("the zero vector has no perp space")
    return PerpSpace(of=x, free_indices=x.cosupport())


@dataclass(frozen=True)
class ProjectiveRay:
    """A nonzero vector up to one global unit factor, held by the canonical
    representative whose first nonzero entry is w^0."""

    representative: StateVector

    def __post_init__(self) -> None:
        rep = self.representative
        supp = rep.support()
        if not supp:
            raise ValueError("the zero vector spans no ray")
        if rep[supp[0]].exp != 0:
            raise ValueError("ray representative must lead with w^0; use ray_of")

    @property
    def dim(self) -> int:
        return self.representative.dim

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def is_simple(self) -> bool:
        return self.representative.is_simple

    def __str__(self) -> str:
        return f"[{self.representative}]"


def ray_of(x: StateVector) -> ProjectiveRay:
    """Canonicalize: scale so the first nonzero entry has exponent 0.

    Every global-scalar orbit contains exactly one such representative, so
    ray equality is representative equality.
    """
    supp = x.support()
    if not supp:
        raise ValueError("the zero vector spans no ray")
    lead = x[supp[0]]
    return ProjectiveRay(x.scale(lead.inverse()))


def rays_equal(p: ProjectiveRay, q: ProjectiveRay) -> bool:
    return p == q


def enumerate_vectors(m: int, l: int, include_zero: bool = False) -> list[StateVector]:
    """All vectors of dimension m at level l, in lexicographic entry order
    (zero before w^0 before w^1 ...)."""
    if m < 1 or l < 1:
        raise ValueError("m and l must be >= 1")
    choices = [zero(l), *(unit(e, l) for e in range(l))]
    out = []
    for combo in itertools.product(choices, repeat=m):
        v = StateVector(combo)
        if include_zero or not v.is_zero:
            out.append(v)
    return out


def enumerate_rays(m: int, l: int) -> list[ProjectiveRay]:
    """All ((l+1)^m - 1)/l rays, in lexicographic order of representatives."""
    rays = []
    for v in enumerate_vectors(m, l):
        supp = v.support()
        if v[supp[0]].exp == 0:  # keep only canonical representatives
            rays.append(ProjectiveRay(v))
    return rays


def ray_count(m: int, l: int) -> int:
    return ((l + 1) ** m - 1) // l


def simple_rays(m: int, l: int) -> list[ProjectiveRay]:
    """The m simple rays, one per coordinate."""
    return [ProjectiveRay(basis_state(i, m, l)) for i in range(m)]


def tensor(x: StateVector, y: StateVector) -> StateVector:
    """Row-major tensor product: entry (i, j) at flat index i * dim(y) + j."""
    if x.order != y.order:
        raise ValueError(f"level mismatch: {x.order} vs {y.order}")
    return StateVector(tuple(xi * yj for xi in x for yj in y))
