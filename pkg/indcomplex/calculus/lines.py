"""Closed forms: products with paths, cycles and complete graphs."""

from typing import Dict, List, NamedTuple, Tuple

from indcomplex.calculus.spheres import (
    SphereSpace,
    disjoint_union,
    point,
    sphere,
    suspend,
    suspend_n,
    wedge,
    wedge_of_spheres,
    wedge_power,
)
from indcomplex.utils import binomial


class ClosedFormTerm(NamedTuple):
    p: int
    """Number of factors."""
    d: int
    count: int


def line_multiplicity(m: int, n: int, k: int, p: int, d: int) -> int:
    """`n^p * C(d - pk + 1, p) * C(p + 1, 3(d - pk + 1) - m)`."""
    shifted = d - p * k + 1
    return n**p * binomial(shifted, p) * binomial(p + 1, 3 * shifted - m)


def line_terms(m: int, n: int, k: int) -> List[ClosedFormTerm]:
    """Every `(p, d)` with a positive multiplicity, by p then d."""
    _check_mnk(m, n, k)
    terms = []
    for p in range((m + 1) // 2 + 1):
        # nonzero only for pk - 1 + max(p, m/3) <= d <= pk + (m + p - 2)/3
        for d in range(max(p * k - 1, 0), p * k + m + 1):
            if count := line_multiplicity(m, n, k, p, d):
                terms.append(ClosedFormTerm(p, d, count))
    return terms


def _wedge_of_terms(terms: List[ClosedFormTerm]) -> SphereSpace:
    dims: Dict[int, int] = {}
    for term in terms:
        dims[term.d] = dims.get(term.d, 0) + term.count
    return wedge_of_spheres(dims)


def x_space(m: int, n: int, k: int) -> SphereSpace:
    """The auxiliary wedge: every formula term in one wedge, for all m."""
    return _wedge_of_terms(line_terms(m, n, k))


def closed_form_L(m: int, n: int, k: int) -> Tuple[SphereSpace, List[ClosedFormTerm]]:
    """Homotopy type of `I(L_m ∘ H)` when `I(H) ≃ ∨_n S^k`."""
    terms = line_terms(m, n, k)
    base = sphere(k, n)
    if m == 1:
        return base, terms
    if m == 2:
        return disjoint_union(base, base), terms
    if m == 3:
        return disjoint_union(base, sphere(2 * k + 1, n * n)), terms
    return _wedge_of_terms(terms), terms


def x_recursion_combination(m: int, n: int, k: int) -> SphereSpace:
    """`ΣX_m ∨ n·Σ^{k+1}X_m ∨ n·Σ^{k+1}X_{m+1}`, which must equal `X_{m+3}`."""
    x_m = x_space(m, n, k)
    x_next = x_space(m + 1, n, k)
    return wedge(
        suspend(x_m),
        wedge(
            wedge_power(suspend_n(x_m, k + 1), n),
            wedge_power(suspend_n(x_next, k + 1), n),
        ),
    )


def cycle_homotopy(n: int) -> SphereSpace:
    """`I(C_n)`: two (k-1)-spheres, one (k-1)-sphere or one k-sphere by n mod 3."""
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n!r}")
    k, i = divmod(n, 3)
    if i == 0:
        return sphere(k - 1, 2)
    if i == 1:
        return sphere(k - 1)
    return sphere(k)


def complete_homotopy(n: int) -> SphereSpace:
    """`I(K_n)` is n points, i.e. `∨_{n-1} S^0`."""
    if n < 1:
        raise ValueError(f"complete graph requires n >= 1, got {n!r}")
    if n == 1:
        return point()
    return sphere(0, n - 1)


def line_connectivity(m: int, k: int) -> int:
    """Connectivity of `I(L_m ∘ H)`, independent of n."""
    _check_mnk(m, 1, k)
    l, i = divmod(m, 3)
    if i == 0:
        return l - 2
    if i == 1:
        return k + l - 1
    return l - 1


def line_connectivity_recursive(m: int, k: int) -> int:
    _check_mnk(m, 1, k)
    conn = [k - 1, -1, -1]
    while len(conn) < m:
        r = len(conn) - 2
        # conn(L_{r+3}) from conn(L_r) and conn(L_{r+1}), 1-based
        conn.append(min(conn[r - 1] + 1, conn[r] + k + 1))
    return conn[m - 1]


def _check_mnk(m: int, n: int, k: int) -> None:
    if m < 1 or n < 1 or k < 0:
        raise ValueError(f"need m >= 1, n >= 1, k >= 0; got m={m}, n={n}, k={k}")
