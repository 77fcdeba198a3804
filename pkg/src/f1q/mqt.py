"""Modal quantum theory over F_{q^2} and its monoid-field counterpart.

Small quadratic extensions F_{q^2} carry the conjugation x -> x^q with fixed
field F_q, a total Hermitian form, and a Born-style value sigma(h)*h that
always lands in the fixed field.  Filtering monomial matrices over F_{q^2}
for unitarity by dense matrix arithmetic shows the allowed scalars are
exactly the (q+1)-st roots of unity, the same cyclic group mu_{r+2} that the
monoid-field unitary groups carry at r = q - 1.  ``dictionary_table`` lines
the two theories up side by side and machine-checks that alignment.

Elements of F_{q^2} are coefficient pairs (c0, c1) meaning c0 + c1*t, with t
a root of the field's modulus polynomial t^2 + b*t + c.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import classify_involution
from .operators import unitary_group

__all__ = [
    "GFElement",
    "GFField",
    "gf_build",
    "hermitian_form",
    "born_value",
    "MonomialUnitaryScan",
    "monomial_unitary_entries",
    "DictionaryRow",
    "DictionaryTable",
    "dictionary_table",
]

GFElement = tuple[int, int]

MAX_Q = 13


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class GFField:
    """F_{q^2} = F_p[t] / (t^2 + b*t + c) with conjugation x -> x^q."""

    p: int
    modulus: tuple[int, int]

    @property
    def q(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p * self.p

    @property
    def zero(self) -> GFElement:
        return (0, 0)

    @property
    def one(self) -> GFElement:
        return (1, 0)

    @property
    def t(self) -> GFElement:
        return (0, 1)

    def add(self, x: GFElement, y: GFElement) -> GFElement:
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def neg(self, x: GFElement) -> GFElement:
        return (-x[0] % self.p, -x[1] % self.p)

    def sub(self, x: GFElement, y: GFElement) -> GFElement:
        return self.add(x, self.neg(y))

    def mul(self, x: GFElement, y: GFElement) -> GFElement:
        # (x0 + x1 t)(y0 + y1 t) with t^2 = -(b t + c).
        b, c = self.modulus
        t2 = x[1] * y[1]
        c0 = x[0] * y[0] - c * t2
        c1 = x[0] * y[1] + x[1] * y[0] - b * t2
        return (c0 % self.p, c1 % self.p)

    def pow(self, x: GFElement, k: int) -> GFElement:
        if k < 0:
            return self.pow(self.inverse(x), -k)
        out, base = self.one, x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inverse(self, x: GFElement) -> GFElement:
        if x == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(x, self.order - 2)

    def conj(self, x: GFElement) -> GFElement:
        return self.pow(x, self.q)

    def is_fixed(self, x: GFElement) -> bool:
        return self.conj(x) == x

    def elements(self) -> list[GFElement]:
        return [(c0, c1) for c1 in range(self.p) for c0 in range(self.p)]

    def units(self) -> list[GFElement]:
        return [x for x in self.elements() if x != self.zero]

    def format_element(self, x: GFElement) -> str:
        c0, c1 = x
        if c1 == 0:
            return str(c0)
        t_part = "t" if c1 == 1 else f"{c1}t"
        return t_part if c0 == 0 else f"{t_part}+{c0}"

    def modulus_string(self) -> str:
        b, c = self.modulus
        body = "t^2"
        if b:
            body += "+t" if b == 1 else f"+{b}t"
        if c:
            body += f"+{c}"
        return body


def gf_build(q: int) -> GFField:
    """F_{q^2} with the lexicographically smallest irreducible modulus.

    Moduli t^2 + b*t + c are ordered by (b, c); irreducible means no root
    in F_q.  For q = 2 this picks t^2+t+1, for q = 3 it picks t^2+1.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q > MAX_Q:
        raise ValueError(f"q must be <= {MAX_Q}, got {q}")
    for b in range(q):
        for c in range(q):
            if all((x * x + b * x + c) % q for x in range(q)):
                return GFField(q, (b, c))
    raise AssertionError(f"no irreducible quadratic over F_{q}")


GFVector = tuple[GFElement, ...]


def hermitian_form(field: GFField, x: GFVector, y: GFVector) -> GFElement:
    """Total standard form conj(x_1)y_1 + ... + conj(x_m)y_m."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    total = field.zero
    for xi, yi in zip(x, y):
        total = field.add(total, field.mul(field.conj(xi), yi))
    return total


def born_value(field: GFField, x: GFVector, y: GFVector) -> GFElement:
    """sigma(<x|y>) * <x|y>; always an element of the fixed field F_q."""
    h = hermitian_form(field, x, y)
    return field.mul(field.conj(h), h)


@dataclass(frozen=True)
class MonomialUnitaryScan:
    """Dense-arithmetic filter of monomial matrices over F_{q^2}."""

    q: int
    m: int
    unitary_count: int
    allowed_scalars: tuple[GFElement, ...]

    @property
    def scalar_group_order(self) -> int:
        return len(self.allowed_scalars)


def _dense_monomial(
    field: GFField, perm: tuple[int, ...], scalars: tuple[GFElement, ...]
) -> list[list[GFElement]]:
    m = len(perm)
    rows = [[field.zero] * m for _ in range(m)]
    for j in range(m):
        rows[perm[j]][j] = scalars[j]
    return rows


def _is_dense_unitary(field: GFField, a: list[list[GFElement]]) -> bool:
    # (A* A)[i][j] = sum_k conj(A[k][i]) * A[k][j], compared to identity.
    m = len(a)
    for i in range(m):
        for j in range(m):
            total = field.zero
            for k in range(m):
                total = field.add(total, field.mul(field.conj(a[k][i]), a[k][j]))
            if total != (field.one if i == j else field.zero):
                return False
    return True


def monomial_unitary_entries(q: int, m: int) -> MonomialUnitaryScan:
    """Scalars occurring in unitary monomial matrices over F_{q^2}.

    Every (perm, scalars) candidate is materialized as a dense matrix and
    tested via conjugate-transpose times itself, with no shortcut through
    the scalar condition; the survivors' scalars form the group of
    (q+1)-st roots of unity.
    """
    if m < 1 or m > 4:
        raise ValueError(f"m must be in 1..4, got {m}")
    field = gf_build(q)
    count = 0
    seen: set[GFElement] = set()
    for perm in itertools.permutations(range(m)):
        for scalars in itertools.product(field.units(), repeat=m):
            if _is_dense_unitary(field, _dense_monomial(field, perm, scalars)):
                count += 1
                seen.update(scalars)
    return MonomialUnitaryScan(
        q=q, m=m, unitary_count=count, allowed_scalars=tuple(sorted(seen))
    )


@dataclass(frozen=True)
class DictionaryRow:
    theory: str
    field: str
    involution: str
    fixed_field: str
    standard_form: str
    unitary_scalars: str

    def to_json(self) -> dict:
        return {
            "theory": self.theory,
            "field": self.field,
            "involution": self.involution,
            "fixed_field": self.fixed_field,
            "standard_form": self.standard_form,
            "unitary_scalars": self.unitary_scalars,
        }


@dataclass(frozen=True)
class DictionaryTable:
    """Four quantum theories aligned by (field, involution, fixed field).

    The modal and absolute rows are instantiated at concrete q and
    r = q - 1 and cross-checked: both monomial-unitary scalar groups are
    cyclic of the same order q + 1 = r + 2, and the fixed fields have the
    same size q = r + 1.
    """

    q: int
    r: int
    rows: tuple[DictionaryRow, ...]
    modal_scalar_order: int
    absolute_scalar_order: int
    fixed_sizes: tuple[int, int]
    modulus: str

    @property
    def aligned(self) -> bool:
        return (
            self.r == self.q - 1
            and self.modal_scalar_order == self.q + 1
            and self.absolute_scalar_order == self.r + 2
            and self.fixed_sizes[0] == self.fixed_sizes[1]
        )

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "r": self.r,
            "modulus": self.modulus,
            "rows": [row.to_json() for row in self.rows],
            "alignment": {
                "modal_scalar_order": self.modal_scalar_order,
                "absolute_scalar_order": self.absolute_scalar_order,
                "fixed_field_sizes": list(self.fixed_sizes),
                "aligned": self.aligned,
            },
        }

    def to_markdown(self) -> str:
        header = (
            "| theory | field | involution | fixed field | standard form "
            "| unitary scalars |"
        )
        sep = "|---|---|---|---|---|---|"
        lines = [header, sep]
        for row in self.rows:
            lines.append(
                f"| {row.theory} | {row.field} | {row.involution} "
                f"| {row.fixed_field} | {row.standard_form} "
                f"| {row.unitary_scalars} |"
            )
        return "\n".join(lines)

    def csv_rows(self) -> list[list[str]]:
        out = [
            [
                "theory",
                "field",
                "involution",
                "fixed_field",
                "standard_form",
                "unitary_scalars",
            ]
        ]
        for row in self.rows:
            out.append(
                [
                    row.theory,
                    row.field,
                    row.involution,
                    row.fixed_field,
                    row.standard_form,
                    row.unitary_scalars,
                ]
            )
        return out


def dictionary_table(q: int) -> DictionaryTable:
    """Instantiate the four-theory comparison at prime q and r = q - 1.

    The modal scalar group is measured by the dense monomial-unitary scan
    over F_{q^2}; the absolute scalar group is collected from the actual
    unitary group over the level-r(r+2) monoid field at m = 2.  The static
    complex and division-ring rows document the theories the finite rows
    imitate.
    """
    field = gf_build(q)
    r = q - 1
    level = r * (r + 2)
    scan = monomial_unitary_entries(q, m=2)

    sigma = classify_involution(level, r)
    if not sigma.valid:
        raise AssertionError(f"level {level} must admit the power-(r+1) involution")
    absolute_scalars = sorted(
        {s.exp for u in unitary_group(2, r) for s in u.scalars}
    )
    fixed_sizes = (q, sigma.fixed_field_order + 1)

    rows = (
        DictionaryRow(
            theory="Actual",
            field="C",
            involution="v -> conj(v)",
            fixed_field="R",
            standard_form="conj(x_1)y_1 + ... + conj(x_m)y_m",
            unitary_scalars="U(1), the unit circle",
        ),
        DictionaryRow(
            theory="Modal",
            field=f"F_{q * q} = F_{q}[t]/({field.modulus_string()})",
            involution=f"v -> v^{q}",
            fixed_field=f"F_{q}",
            standard_form=f"x_1^{q} y_1 + ... + x_m^{q} y_m",
            unitary_scalars=(
                f"roots of unity of order {q + 1} "
                f"(group order {scan.scalar_group_order})"
            ),
        ),
        DictionaryRow(
            theory="General",
            field="division ring k with involution",
            involution="sigma",
            fixed_field="k_sigma",
            standard_form="x_1^sigma y_1 + ... + x_m^sigma y_m",
            unitary_scalars="norm-one scalars of k",
        ),
        DictionaryRow(
            theory="Absolute",
            field=f"F_1^{level} = {{0}} + mu_{level}",
            involution=f"v -> v^{r + 1}",
            fixed_field=f"F_1^{r}",
            standard_form=f"x_1^{r + 1} y_1 + ... + x_m^{r + 1} y_m (partial)",
            unitary_scalars=f"mu_{r + 2}, order {len(absolute_scalars)}",
        ),
    )
    return DictionaryTable(
        q=q,
        r=r,
        rows=rows,
        modal_scalar_order=scan.scalar_group_order,
        absolute_scalar_order=len(absolute_scalars),
        fixed_sizes=fixed_sizes,
        modulus=field.modulus_string(),
    )
