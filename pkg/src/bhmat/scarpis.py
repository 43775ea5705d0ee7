"""The two block constructions that grow Butson matrices.

phi turns an order-n input into an order n(n-1) output using a complete
LSESC family of order n-1.  psi turns an order-n input (n, m even, with the
C1 row pair and a C2 witness cell) into an order n(n/2-1) output using a
complete family of order n/2-1, inflated by a factor of two.

Both accept an optional second input matrix: the first ("x-source") feeds
the top Kronecker band and the deleted-row scalars, the second feeds the
core or the extracted T.  With one input the same matrix plays both roles.

Every output is re-verified exactly before it is returned; a construction
is never trusted on faith.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import chain
from typing import Sequence

from .butson import (
    ButsonMatrix,
    TExtraction,
    core,
    extract_t,
    find_c1_pairs,
    find_c2_cells,
    fourier,
    verify,
)
from .cyclotomic import dot_counts, exponent_counts, sum_equals
from .errors import PlanError, VerificationError
from .latin import (
    CLASSICAL_ORDER_CAP,
    LatinSquare,
    LatinTensor,
    are_lsesc,
    classical_tensor_set,
    inflate,
    reconstruct,
)


@dataclass(frozen=True)
class PhiPlan:
    """Inputs for phi: matrix H, a complete LSESC tensor set of order n-1,
    an optional x-source G, and which row of the x-source to delete."""

    h: ButsonMatrix
    tensors: tuple[LatinTensor, ...]
    g: ButsonMatrix | None = None
    deleted_row: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "tensors", tuple(self.tensors))


@dataclass(frozen=True)
class PsiPlan:
    """Inputs for psi; a None c1_pair or c2_cell means "first in scan order"."""

    h: ButsonMatrix
    tensors: tuple[LatinTensor, ...]
    g: ButsonMatrix | None = None
    c1_pair: tuple[int, int] | None = None
    c2_cell: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "tensors", tuple(self.tensors))


def _require_verified(b: ButsonMatrix, label: str) -> None:
    report = verify(b)
    if not report.ok:
        raise VerificationError(
            f"{label} failed exact verification "
            f"(rows {report.bad_row_pair}, columns {report.bad_col_pair})"
        )


def _checked_family(
    tensors: Sequence[LatinTensor], order: int, count: int
) -> list[LatinSquare]:
    if len(tensors) != count:
        raise PlanError(
            f"need a complete LSESC set of order {order} ({count} squares), "
            f"got {len(tensors)}"
        )
    for t in tensors:
        if t.n != order or t.size != order:
            raise PlanError(f"tensor of order {t.n} (size {t.size}); expected {order}")
    squares = [reconstruct(t) for t in tensors]
    for i in range(len(squares)):
        for j in range(i + 1, len(squares)):
            if not are_lsesc(squares[i], squares[j]):
                raise PlanError(f"squares {i + 1} and {j + 1} are not LSESC")
    return squares


def _scaled(row: Sequence[int], shift: int, m: int) -> tuple[int, ...]:
    return tuple((v + shift) % m for v in row)


def phi(plan: PhiPlan) -> ButsonMatrix:
    """Assemble the order n(n-1) matrix [B0; B] from an order-n input.

    B0 is the x-source minus its deleted row, Kronecker-expanded by the
    all-ones row of width n-1.  B has n-1 block rows; block row k leads
    with core row k+1 and continues with the core rows permuted by the
    k-th tensor's frontal slices (block row 0 uses identity slices).
    Column block j is scaled throughout by the j-th deleted-row entry.
    """
    h = plan.h
    src = plan.g if plan.g is not None else plan.h
    n, m = h.n, h.m
    if n < 3:
        raise PlanError(f"phi needs order >= 3, got {n}")
    if src.n != n or src.m != m:
        raise PlanError("both inputs must share the same order and root order")
    if not 1 <= plan.deleted_row <= n:
        raise PlanError(f"deleted row {plan.deleted_row} out of range 1..{n}")
    _checked_family(plan.tensors, order=n - 1, count=n - 2)
    _require_verified(h, "input H")
    if src is not h:
        _require_verified(src, "input G")

    x = src.exponents[plan.deleted_row - 1]
    c = core(h).exponents
    width = n - 1

    rows_out: list[tuple[int, ...]] = []
    for idx, row in enumerate(src.exponents):
        if idx == plan.deleted_row - 1:
            continue
        rows_out.append(tuple(v for v in row for _ in range(width)))

    for k in range(n - 1):
        lead = _scaled(c[k], x[0], m)
        images = (
            None
            if k == 0
            else [plan.tensors[k - 1].row_images(bc) for bc in range(1, n)]
        )
        for r in range(width):
            parts = [lead]
            for bc in range(1, n):
                source = c[r] if images is None else c[images[bc - 1][r]]
                parts.append(_scaled(source, x[bc], m))
            rows_out.append(tuple(chain.from_iterable(parts)))

    out = ButsonMatrix(m, n * (n - 1), tuple(rows_out))
    _require_verified(out, "phi output")
    return out


def check_t_properties(ext: TExtraction, m: int) -> None:
    """Exact check of the four structural properties of T = [C; D].

    Distinct rows within C (and within D) have dot product -2; any C row
    against any D row gives 0; each C row sums to -1 on both halves; each
    D row sums to -1 on the left half and +1 on the right half.
    """
    split = ext.split

    def half_sums_ok(row: Sequence[int], left: int, right: int) -> bool:
        return sum_equals(exponent_counts(row[:split], m), left) and sum_equals(
            exponent_counts(row[split:], m), right
        )

    for label, rows in (("C", ext.c_rows), ("D", ext.d_rows)):
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if not sum_equals(dot_counts(rows[i], rows[j], m), -2):
                    raise PlanError(f"rows {i + 1},{j + 1} of {label} do not dot to -2")
    for i, c_row in enumerate(ext.c_rows):
        for j, d_row in enumerate(ext.d_rows):
            if not sum_equals(dot_counts(c_row, d_row, m), 0):
                raise PlanError(f"row {i + 1} of C vs row {j + 1} of D is not orthogonal")
    for i, c_row in enumerate(ext.c_rows):
        if not half_sums_ok(c_row, -1, -1):
            raise PlanError(f"row {i + 1} of C lacks the (-1, -1) half sums")
    for i, d_row in enumerate(ext.d_rows):
        if not half_sums_ok(d_row, -1, 1):
            raise PlanError(f"row {i + 1} of D lacks the (-1, +1) half sums")


def resolve_psi(plan: PsiPlan) -> PsiPlan:
    """Fill in defaulted choices: first C1 pair of the x-source, first C2 cell of H."""
    h = plan.h
    src = plan.g if plan.g is not None else plan.h
    if h.m % 2 or h.n % 2:
        raise PlanError(f"psi needs even order and root order, got n={h.n}, m={h.m}")
    if h.n < 6:
        raise PlanError(f"psi needs order >= 6, got {h.n}")
    if src.n != h.n or src.m != h.m:
        raise PlanError("both inputs must share the same order and root order")

    cells = find_c2_cells(h)
    if plan.c2_cell is None:
        if not cells:
            raise PlanError("input has no C2 cell (no +-1 row and column meeting at -1)")
        cell = cells[0]
    else:
        cell = plan.c2_cell
        if cell not in cells:
            raise PlanError(f"cell {cell} is not a C2 witness of the input")

    pairs = find_c1_pairs(src)
    if plan.c1_pair is None:
        if not pairs:
            raise PlanError("x-source has no C1 row pair")
        pair = pairs[0]
    else:
        pair = plan.c1_pair
        if pair not in pairs:
            raise PlanError(f"pair {pair} is not a C1 pair of the x-source")
    return replace(plan, c1_pair=pair, c2_cell=cell)


def psi(plan: PsiPlan) -> ButsonMatrix:
    """Assemble the order n(n/2-1) matrix [B0; B] from an order-n input.

    B0 is the x-source minus the two C1 rows, Kronecker-expanded by width
    n/2-1.  B has n/2-1 block rows of height n-2: the leading block stacks
    copies of T's rows k+1 (C rows on top, D rows below), the trailing
    blocks run T through the doubled tensor slices.  The left/right halves
    of every block are scaled by consecutive entries of the first C1 row.
    """
    resolved = resolve_psi(plan)
    h = resolved.h
    src = resolved.g if resolved.g is not None else resolved.h
    n, m = h.n, h.m
    half = n // 2 - 1

    _checked_family(resolved.tensors, order=half, count=half - 1)
    _require_verified(h, "input H")
    if src is not h:
        _require_verified(src, "input G")

    ext = extract_t(h, resolved.c2_cell)
    check_t_properties(ext, m)

    t_idx, s_idx = resolved.c1_pair
    x = src.exponents[t_idx - 1]

    rows_out: list[tuple[int, ...]] = []
    for idx, row in enumerate(src.exponents):
        if idx in (t_idx - 1, s_idx - 1):
            continue
        rows_out.append(tuple(v for v in row for _ in range(half)))

    t_rows = ext.t
    split = ext.split

    def scale_halves(row: Sequence[int], left: int, right: int) -> tuple[int, ...]:
        return tuple(
            (v + (left if pos < split else right)) % m for pos, v in enumerate(row)
        )

    doubled = [inflate(tensor, 2) for tensor in resolved.tensors]
    for k in range(half):
        lead_c = scale_halves(t_rows[k], x[0], x[1])
        lead_d = scale_halves(t_rows[split + k], x[0], x[1])
        images = (
            None
            if k == 0
            else [doubled[k - 1].row_images(bc) for bc in range(1, half + 1)]
        )
        for r in range(n - 2):
            parts = [lead_c if r < split else lead_d]
            for bc in range(1, half + 1):
                source = t_rows[r] if images is None else t_rows[images[bc - 1][r]]
                parts.append(scale_halves(source, x[2 * bc], x[2 * bc + 1]))
            rows_out.append(tuple(chain.from_iterable(parts)))

    out = ButsonMatrix(m, n * half, tuple(rows_out))
    _require_verified(out, "psi output")
    return out


def halving_family(r: int) -> ButsonMatrix:
    """The family BH(2(2^r+1), 2^(r+1)(2^r+1)): psi on the Fourier matrix of
    order 2(2^r+1) with the classical LSESC family over GF(2^r)."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    q = 2**r
    if q > CLASSICAL_ORDER_CAP:
        raise PlanError(f"2^{r} exceeds the LSESC order cap {CLASSICAL_ORDER_CAP}")
    n = 2 * (q + 1)
    return psi(PsiPlan(h=fourier(n), tensors=tuple(classical_tensor_set(q))))


def count_phi_outputs(mols_count: int, bh_count: int, n: int) -> int:
    """Number of phi outputs: |MOLS(n-1)| * |BH(m,n)|^2 * n; cardinalities are
    caller-supplied, nothing is enumerated here."""
    if mols_count < 0 or bh_count < 0 or n < 0:
        raise ValueError("counts must be non-negative")
    return mols_count * bh_count * bh_count * n


def count_psi_outputs(
    mols_count: int, a2_count: int, dh_values: Sequence[int]
) -> int:
    """Number of psi outputs: sum over x-sources of |MOLS(n/2-1)| * |A2| * d_H,
    where each d_H is that source's count of unordered C1 pairs."""
    if mols_count < 0 or a2_count < 0 or any(d < 0 for d in dh_values):
        raise ValueError("counts must be non-negative")
    return sum(mols_count * a2_count * dh for dh in dh_values)
