"""Cloning obstructions and almost-unitary deletion.

Vectorial cloning dies on a scalar identity (a global factor would have to
satisfy a^2 = a), so everything here is posed projectively: a cloner must
send the ray of phi (x) blank to the ray of phi (x) phi.  Exhaustive search
at desk scale shows no unitary does this for all rays, while an explicit
permutation clones the simple rays.  Deletion runs the other way: no unitary
deletes (its inverse would clone), but a singular operator that is unitary
on every nonsingular principal submatrix deletes every ray whose designated
coordinate is nonzero, with exactly computable success probability.

Annihilated rays (designated coordinate zero) are reported as outcomes, not
raised as errors: the deletion operator maps them to the zero vector, which
simply is not a ray.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .budget import check_budget
from .field import F1Element, InvolutionSpec, one, units
from .frames import (
    ProjectiveRay,
    StateVector,
    basis_state,
    enumerate_rays,
    enumerate_vectors,
    ray_of,
    simple_rays,
    tensor,
)
from .operators import (
    AnyMatrix,
    MonomialMatrix,
    SubunitalMatrix,
    enumerate_GL,
    enumerate_subunital,
    gl_order,
    is_unitary,
)

__all__ = [
    "scalar_obstruction",
    "CloneSearchResult",
    "clones_rays",
    "search_projective_cloner",
    "build_simple_cloner",
    "NonSimpleObstruction",
    "nonsimple_defeats_cloner",
    "is_almost_unitary",
    "build_deletion_operator",
    "DeletionReport",
    "verify_deletion",
    "probability_a1",
    "limit_m_infinity",
    "limit_l_infinity",
    "AlmostUnitaryCloningScan",
    "almost_unitary_cloning_fails",
]


def scalar_obstruction(l: int) -> list[F1Element]:
    """Units a with a^2 != a, each one killing vectorial cloning at level l.

    A cloner applied to a scaled input forces a^2 = a for every unit a, so a
    nonempty list (every l >= 2) settles the vectorial question outright.
    """
    return [a for a in units(l) if a * a != a]


@dataclass(frozen=True)
class CloneSearchResult:
    """Outcome of an exhaustive projective cloner search."""

    m: int
    l: int
    scope: str
    found: bool
    witness_operator: MonomialMatrix | None
    witness_blank: StateVector | None
    unitaries_searched: int
    blanks_searched: int
    rays_targeted: int


def _cloner_targets(m: int, l: int, scope: str) -> list[ProjectiveRay]:
    if scope == "all":
        return enumerate_rays(m, l)
    if scope == "simple":
        return simple_rays(m, l)
    raise ValueError(f"scope must be 'all' or 'simple', got {scope!r}")


def clones_rays(
    u: MonomialMatrix, blank: StateVector, targets: list[ProjectiveRay]
) -> bool:
    """Whether u maps ray(phi (x) blank) to ray(phi (x) phi) for every target."""
    for phi in targets:
        rep = phi.representative
        if ray_of(u.apply(tensor(rep, blank))) != ray_of(tensor(rep, rep)):
            return False
    return True


def _cloner_search_space(
    m: int, l: int, sigma: InvolutionSpec | None, budget: int | None
) -> tuple[list[MonomialMatrix], list[StateVector]]:
    unitaries = [a for a in enumerate_GL(m * m, l, budget) if is_unitary(a, sigma)]
    blanks = enumerate_vectors(m, l)
    return unitaries, blanks


def _scan_cloner_chunk(
    args: tuple[int, int, InvolutionSpec | None, str, int | None, int, int],
) -> int | None:
    """Scan unitary indices [lo, hi); return the smallest witness pair index."""
    m, l, sigma, scope, budget, lo, hi = args
    unitaries, blanks = _cloner_search_space(m, l, sigma, budget)
    targets = _cloner_targets(m, l, scope)
    for ui in range(lo, hi):
        for bi, blank in enumerate(blanks):
            if clones_rays(unitaries[ui], blank, targets):
                return ui * len(blanks) + bi
    return None


def search_projective_cloner(
    m: int,
    l: int,
    sigma: InvolutionSpec | None = None,
    scope: str = "all",
    budget: int | None = None,
    workers: int = 1,
) -> CloneSearchResult:
    """Exhaust all (unitary, blank) pairs for a projective cloner.

    scope='all' asks for a universal cloner over every ray and is expected to
    find none; scope='simple' restricts the demand to the m simple rays and
    is expected to find a witness.  The witness returned is always the first
    in canonical enumeration order (unitaries outer, blanks inner), and the
    worker count never changes the answer, only the wall time.
    """
    unitaries, blanks = _cloner_search_space(m, l, sigma, budget)
    targets = _cloner_targets(m, l, scope)
    check_budget(len(unitaries) * len(blanks), budget, what="cloner search")

    best: int | None = None
    if workers <= 1 or len(unitaries) < 2 * workers:
        for ui, u in enumerate(unitaries):
            for bi, blank in enumerate(blanks):
                if clones_rays(u, blank, targets):
                    best = ui * len(blanks) + bi
                    break
            if best is not None:
                break
    else:
        bounds = [
            (len(unitaries) * k // workers, len(unitaries) * (k + 1) // workers)
            for k in range(workers)
        ]
        jobs = [(m, l, sigma, scope, budget, lo, hi) for lo, hi in bounds]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = [h for h in pool.map(_scan_cloner_chunk, jobs) if h is not None]
        best = min(hits) if hits else None

    witness_u = witness_b = None
    if best is not None:
        witness_u = unitaries[best // len(blanks)]
        witness_b = blanks[best % len(blanks)]
    return CloneSearchResult(
        m=m,
        l=l,
        scope=scope,
        found=best is not None,
        witness_operator=witness_u,
        witness_blank=witness_b,
        unitaries_searched=len(unitaries),
        blanks_searched=len(blanks),
        rays_targeted=len(targets),
    )


def build_simple_cloner(m: int, l: int, blank_index: int = 0) -> tuple[MonomialMatrix, StateVector]:
    """A permutation that clones every simple ray against the given blank.

    Column (i, blank) of the tensor space is rerouted to (i, i), so basis
    input e_i (x) e_blank comes out as e_i (x) e_i; the rerouting is a
    product of disjoint transpositions, hence a permutation.
    """
    if not 0 <= blank_index < m:
        raise ValueError(f"blank index {blank_index} out of range for dimension {m}")
    perm = list(range(m * m))
    for i in range(m):
        a, b = i * m + blank_index, i * m + i
        perm[a], perm[b] = perm[b], perm[a]
    return MonomialMatrix.from_permutation(perm, l), basis_state(blank_index, m, l)


@dataclass(frozen=True)
class NonSimpleObstruction:
    """Support arithmetic ruling out any cloner for one non-simple ray.

    Monomial operators permute coordinates up to unit factors, so they
    preserve support size; a blank with one-point support makes the
    reachable support size |supp(phi)| while the clone target needs
    |supp(phi)|^2.
    """

    ray: ProjectiveRay
    support_size: int
    reachable_support_size: int
    target_support_size: int

    @property
    def impossible(self) -> bool:
        return self.reachable_support_size != self.target_support_size


def nonsimple_defeats_cloner(m: int, l: int) -> NonSimpleObstruction:
    """First non-simple ray in enumeration order, with the counting record."""
    if m < 2:
        raise ValueError("non-simple rays need dimension >= 2")
    phi = next(r for r in enumerate_rays(m, l) if not r.is_simple)
    size = len(phi.representative.support())
    return NonSimpleObstruction(
        ray=phi,
        support_size=size,
        reachable_support_size=size,
        target_support_size=size * size,
    )


def is_almost_unitary(
    a: AnyMatrix,
    sigma: InvolutionSpec | None = None,
    *,
    bound: int = 12,
    fast_path: bool = True,
) -> bool:
    """Whether every nonsingular principal submatrix of A is unitary.

    Principal means rows and columns are deleted with the same index set.  A
    nonsingular matrix is almost unitary iff it is unitary.  The subset scan
    is 2^dim, so it is capped at ``bound``; diagonal matrices (the deletion
    operator's shape) take a structural shortcut instead, since each of
    their nonsingular principal submatrices is again diagonal and unitarity
    reduces to the per-entry scalar condition.
    """
    sub = a.to_subunital() if isinstance(a, MonomialMatrix) else a
    if fast_path and sub.is_diagonal:
        target = one(sub.order)
        return all(
            ((sigma(s) if sigma else s) * s) == target for _, _, s in sub.cells
        )
    if sub.dim > bound:
        raise ValueError(
            f"principal-subset scan capped at dimension {bound}; "
            "only diagonal matrices have a fast path beyond it"
        )
    for k in range(1, sub.dim + 1):
        for subset in itertools.combinations(range(sub.dim), k):
            block = sub.principal_submatrix(subset)
            if block.is_monomial and not is_unitary(block.to_monomial(), sigma):
                return False
    return True


def build_deletion_operator(m: int, l: int, blank_index: int = 0) -> SubunitalMatrix:
    """The m^2 x m^2 deleter: diagonal ones at positions k*m + blank_index.

    With the default blank_index 0 these are the 1-based diagonal positions
    1, m+1, 2m+1, ..., m^2-m+1.  Applied to phi (x) phi it keeps the column
    phi_blank * phi, i.e. a unit multiple of phi (x) e_blank whenever
    phi_blank is nonzero, and the zero vector otherwise.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0 <= blank_index < m:
        raise ValueError(f"blank index {blank_index} out of range for dimension {m}")
    cells = tuple((k * m + blank_index, k * m + blank_index, one(l)) for k in range(m))
    return SubunitalMatrix(m * m, l, cells)


@dataclass(frozen=True)
class DeletionReport:
    """Per-ray audit of the deletion operator on the diagonal family."""

    m: int
    l: int
    blank_index: int
    operator: SubunitalMatrix
    rays_deleted: int
    rays_annihilated: int
    probability: Fraction

    @property
    def total_rays(self) -> int:
        return self.rays_deleted + self.rays_annihilated

    def to_json(self) -> dict:
        m_inf = limit_m_infinity(self.l)
        l_inf = limit_l_infinity()
        return {
            "m": self.m,
            "l": self.l,
            "deleted": self.rays_deleted,
            "annihilated": self.rays_annihilated,
            "probability": {
                "num": self.probability.numerator,
                "den": self.probability.denominator,
            },
            "limits": {
                "m_inf": {"num": m_inf.numerator, "den": m_inf.denominator},
                "l_inf": {"num": l_inf.numerator, "den": l_inf.denominator},
            },
        }


def verify_deletion(m: int, l: int, blank_index: int = 0) -> DeletionReport:
    """Apply the deleter to phi (x) phi for every ray phi and audit outcomes.

    Rays whose designated coordinate is nonzero must come out on the ray of
    phi (x) e_blank (deleted); the rest must be annihilated to the zero
    vector.  Any other outcome would falsify the construction and raises.
    """
    op = build_deletion_operator(m, l, blank_index)
    blank = basis_state(blank_index, m, l)
    deleted = annihilated = 0
    for phi in enumerate_rays(m, l):
        rep = phi.representative
        image = op.apply(tensor(rep, rep))
        if rep[blank_index].is_unit:
            if ray_of(image) != ray_of(tensor(rep, blank)):
                raise AssertionError(f"deletion failed on {rep}")
            deleted += 1
        else:
            if not image.is_zero:
                raise AssertionError(f"expected annihilation on {rep}")
            annihilated += 1
    return DeletionReport(
        m=m,
        l=l,
        blank_index=blank_index,
        operator=op,
        rays_deleted=deleted,
        rays_annihilated=annihilated,
        probability=Fraction(deleted, deleted + annihilated),
    )


def probability_a1(m: int, l: int) -> Fraction:
    """Exact chance that a uniform ray has nonzero designated coordinate.

    l(l+1)^(m-1) of the ((l+1)^m - 1)/l rays do, giving
    l(l+1)^(m-1) / ((l+1)^m - 1); increasing in l, with limits l/(l+1) as
    m grows and 1 as l grows.
    """
    if m < 1 or l < 1:
        raise ValueError("m and l must be >= 1")
    return Fraction(l * (l + 1) ** (m - 1), (l + 1) ** m - 1)


def limit_m_infinity(l: int) -> Fraction:
    return Fraction(l, l + 1)


def limit_l_infinity() -> Fraction:
    return Fraction(1)


@dataclass(frozen=True)
class AlmostUnitaryCloningScan:
    """Exhaustive check that almost-unitary operators cannot clone either."""

    m: int
    l: int
    ray: ProjectiveRay
    operators_scanned: int
    almost_unitary_count: int
    pairs_checked: int
    counterexample: tuple[SubunitalMatrix, StateVector] | None

    @property
    def cloning_impossible(self) -> bool:
        return self.counterexample is None


def almost_unitary_cloning_fails(
    m: int, l: int, budget: int | None = None
) -> AlmostUnitaryCloningScan:
    """Scan every almost-unitary operator against one non-simple ray.

    Blanks range over all simple states.  Whenever the image of
    phi (x) blank is nonzero its ray is compared to the clone target; a match
    would be a counterexample, and none is expected.
    """
    phi = next(r for r in enumerate_rays(m, l) if not r.is_simple)
    rep = phi.representative
    target = ray_of(tensor(rep, rep))
    blanks = [
        basis_state(i, m, l, exp) for i in range(m) for exp in range(l)
    ]
    candidates = enumerate_subunital(m * m, l, budget)
    almost = [a for a in candidates if is_almost_unitary(a)]
    pairs = 0
    counterexample = None
    for a in almost:
        for blank in blanks:
            pairs += 1
            image = a.apply(tensor(rep, blank))
            if not image.is_zero and ray_of(image) == target:
                counterexample = (a, blank)
                break
        if counterexample:
            break
    return AlmostUnitaryCloningScan(
        m=m,
        l=l,
        ray=phi,
        operators_scanned=len(candidates),
        almost_unitary_count=len(almost),
        pairs_checked=pairs,
        counterexample=counterexample,
    )
