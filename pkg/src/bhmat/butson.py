"""Butson matrices over exponent arrays, with exact verification.

A matrix with entries that are m-th roots of unity is stored as its n x n
array of exponents: entry (i, j) stands for zeta_m^exponents[i][j].  Row
and column orthogonality, the core property, and the C1/C2 conditions are
all decided through the integer-only zero test in the cyclotomic module;
no floating point is involved anywhere in verification.

Row and column indices in the public API are 1-based, matching the usual
matrix convention.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .cyclotomic import dot_counts, negate_exponent, sum_equals
from .errors import FormatError, PlanError


@dataclass(frozen=True)
class ButsonMatrix:
    """Order-n matrix of exponents modulo the root order m."""

    m: int
    n: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.exponents)
        object.__setattr__(self, "exponents", rows)
        if self.m < 1:
            raise ValueError(f"root order must be positive, got {self.m}")
        if self.n < 1:
            raise ValueError(f"matrix order must be positive, got {self.n}")
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise ValueError(f"exponents must form an {self.n}x{self.n} array")
        for row in rows:
            for v in row:
                if not (0 <= v < self.m):
                    raise ValueError(f"exponent {v} out of range [0, {self.m})")

    def column(self, j: int) -> tuple[int, ...]:
        """Column j (0-based) as an exponent row."""
        return tuple(row[j] for row in self.exponents)


@dataclass(frozen=True)
class CoreMatrix:
    """Dephased matrix with the leading all-ones row and column removed.

    Any two distinct rows (or columns) of a core have dot product exactly
    -1, and every row sums to -1; these facts drive both constructions.
    """

    m: int
    order: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.exponents)
        object.__setattr__(self, "exponents", rows)
        if len(rows) != self.order or any(len(row) != self.order for row in rows):
            raise ValueError(f"core must be {self.order}x{self.order}")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the exact orthogonality check.

    bad_row_pair / bad_col_pair hold the first failing pair of 1-based
    indices in lexicographic scan order, or None if that family is clean.
    """

    ok: bool
    bad_row_pair: tuple[int, int] | None = None
    bad_col_pair: tuple[int, int] | None = None


@dataclass(frozen=True)
class TExtraction:
    """The sub-matrix T = [C; D] and the permutations that exposed it.

    row_perm / col_perm list the original 1-based indices of the parent in
    their new order; h_permuted is the parent with those permutations
    applied, and t is its trailing (n-2) x (n-2) block.  split is the
    column count of the left half T1 (= (n-2)/2).
    """

    t: tuple[tuple[int, ...], ...]
    split: int
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    h_permuted: ButsonMatrix

    @property
    def c_rows(self) -> tuple[tuple[int, ...], ...]:
        return self.t[: self.split]

    @property
    def d_rows(self) -> tuple[tuple[int, ...], ...]:
        return self.t[self.split :]

    @property
    def t1(self) -> tuple[tuple[int, ...], ...]:
        """Left column half of T."""
        return tuple(row[: self.split] for row in self.t)

    @property
    def t2(self) -> tuple[tuple[int, ...], ...]:
        """Right column half of T."""
        return tuple(row[self.split :] for row in self.t)


def fourier(n: int) -> ButsonMatrix:
    """The order-n Fourier matrix: exponent (i-1)(j-1) mod n, root order n."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    rows = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return ButsonMatrix(m=n, n=n, exponents=rows)


def verify(b: ButsonMatrix) -> VerifyReport:
    """Exact check that all distinct row pairs and column pairs are orthogonal."""
    bad_rows = _first_non_orthogonal(b.exponents, b.m)
    cols = tuple(b.column(j) for j in range(b.n))
    bad_cols = _first_non_orthogonal(cols, b.m)
    return VerifyReport(
        ok=bad_rows is None and bad_cols is None,
        bad_row_pair=bad_rows,
        bad_col_pair=bad_cols,
    )


def _first_non_orthogonal(
    vectors: Sequence[Sequence[int]], m: int
) -> tuple[int, int] | None:
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if not sum_equals(dot_counts(vectors[i], vectors[j], m), 0):
                return (i + 1, j + 1)
    return None


def dephase(b: ButsonMatrix) -> ButsonMatrix:
    """Normalise so the first row and first column consist of exponent 0.

    Column j is divided by entry (1, j), then row i by its new leading
    entry; in exponent form these are subtractions mod m.  The input must
    already be a Butson matrix for the output to be one.
    """
    first_row = b.exponents[0]
    rows = [
        [(v - first_row[j]) % b.m for j, v in enumerate(row)] for row in b.exponents
    ]
    rows = [[(v - row[0]) % b.m for v in row] for row in rows]
    return ButsonMatrix(b.m, b.n, tuple(tuple(row) for row in rows))


def core(b: ButsonMatrix) -> CoreMatrix:
    """Dephase, then delete the first row and column."""
    normalised = dephase(b)
    rows = tuple(row[1:] for row in normalised.exponents[1:])
    return CoreMatrix(m=b.m, order=b.n - 1, exponents=rows)


def find_c1_pairs(b: ButsonMatrix) -> list[tuple[int, int]]:
    """All row pairs (t, s), t < s, where row s is row t with every second entry negated.

    Entries at even 1-based positions are the negated ones; negation adds
    m/2 to the exponent, so both the root order and the matrix order must
    be even.  Pairs come out in lexicographic order.
    """
    if b.m % 2 != 0:
        raise ValueError(f"C1 needs an even root order, got m={b.m}")
    if b.n % 2 != 0:
        raise ValueError(f"C1 needs an even matrix order, got n={b.n}")
    pairs = []
    for t in range(b.n):
        expected = tuple(
            v if j % 2 == 0 else negate_exponent(v, b.m)
            for j, v in enumerate(b.exponents[t])
        )
        for s in range(t + 1, b.n):
            if b.exponents[s] == expected:
                pairs.append((t + 1, s + 1))
    return pairs


def find_c2_cells(b: ButsonMatrix) -> list[tuple[int, int]]:
    """All cells (i, j) where row i and column j take only the values 1 and -1
    and their common entry is -1.  Row-major scan order; m must be even."""
    if b.m % 2 != 0:
        raise ValueError(f"C2 needs an even root order, got m={b.m}")
    half = b.m // 2
    allowed = {0, half}
    pm_rows = [i for i in range(b.n) if set(b.exponents[i]) <= allowed]
    pm_cols = [j for j in range(b.n) if set(b.column(j)) <= allowed]
    return [
        (i + 1, j + 1)
        for i in pm_rows
        for j in pm_cols
        if b.exponents[i][j] == half
    ]


def _move_to_second(indices: list[int], target: int) -> list[int]:
    rest = [x for x in indices if x != target]
    return [rest[0], target] + rest[1:]


def extract_t(b: ButsonMatrix, cell: tuple[int, int]) -> TExtraction:
    """Expose the sub-matrix T = [C; D] behind a C2 witness cell.

    The parent is permuted in four deterministic steps: the C2 column and
    row are rotated into position 2; then columns 3..n and rows 3..n are
    stable-partitioned so the second row and second column each read
    (1, -1, 1..1, -1..-1).  T is the trailing (n-2) x (n-2) block.
    """
    if cell not in find_c2_cells(b):
        raise PlanError(f"cell {cell} is not a C2 witness of this matrix")
    i0, j0 = cell
    split = (b.n - 2) // 2

    def partition(order: list[int], sign_of, what: str) -> list[int]:
        plus = [x for x in order[2:] if sign_of(x) == 0]
        minus = [x for x in order[2:] if sign_of(x) != 0]
        if len(plus) != split:
            raise PlanError(f"C2 {what} is unbalanced; is the matrix normalised?")
        return order[:2] + plus + minus

    col_order = partition(
        _move_to_second(list(range(1, b.n + 1)), j0),
        lambda c: b.exponents[i0 - 1][c - 1],
        "row",
    )
    row_order = partition(
        _move_to_second(list(range(1, b.n + 1)), i0),
        lambda r: b.exponents[r - 1][j0 - 1],
        "column",
    )

    permuted = tuple(
        tuple(b.exponents[r - 1][c - 1] for c in col_order) for r in row_order
    )
    h_permuted = ButsonMatrix(b.m, b.n, permuted)
    t_block = tuple(row[2:] for row in permuted[2:])
    return TExtraction(
        t=t_block,
        split=split,
        row_perm=tuple(row_order),
        col_perm=tuple(col_order),
        h_permuted=h_permuted,
    )


def permute_columns(b: ButsonMatrix, order: Sequence[int]) -> ButsonMatrix:
    """Reorder columns; order lists the 1-based original indices in their new order."""
    if sorted(order) != list(range(1, b.n + 1)):
        raise ValueError(f"not a permutation of 1..{b.n}: {order}")
    rows = tuple(tuple(row[c - 1] for c in order) for row in b.exponents)
    return ButsonMatrix(b.m, b.n, rows)


# ---------------------------------------------------------------------------
# File formats: a canonical JSON document and a plain-text form.  Both are
# byte-deterministic for a given matrix (and provenance), and round-trip
# exactly.

def matrix_digest(b: ButsonMatrix) -> str:
    payload = _canonical_json({"m": b.m, "n": b.n, "exponents": _listify(b.exponents)})
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _listify(rows: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    return [list(row) for row in rows]


def _canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dump_matrix(
    b: ButsonMatrix, fmt: str = "json", provenance: dict[str, Any] | None = None
) -> str:
    if fmt == "json":
        doc: dict[str, Any] = {"m": b.m, "n": b.n, "exponents": _listify(b.exponents)}
        if provenance is not None:
            doc["provenance"] = provenance
        return _canonical_json(doc) + "\n"
    if fmt == "text":
        lines = [f"BH {b.m} {b.n}"]
        lines.extend(" ".join(str(v) for v in row) for row in b.exponents)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def write_matrix(
    b: ButsonMatrix,
    path: str | Path,
    fmt: str = "json",
    provenance: dict[str, Any] | None = None,
) -> None:
    Path(path).write_text(dump_matrix(b, fmt, provenance), encoding="utf-8")


def parse_matrix(text: str) -> tuple[ButsonMatrix, dict[str, Any] | None]:
    """Parse either format, sniffing by the first non-blank character."""
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("empty matrix file")
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from exc
        try:
            matrix = ButsonMatrix(int(doc["m"]), int(doc["n"]), doc["exponents"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad matrix document: {exc}") from exc
        provenance = doc.get("provenance")
        return matrix, provenance
    lines = [line for line in text.splitlines() if line.strip()]
    header = lines[0].split()
    if len(header) != 3 or header[0] != "BH":
        raise FormatError(f"expected 'BH m n' header, got {lines[0]!r}")
    try:
        m, n = int(header[1]), int(header[2])
        rows = tuple(tuple(int(v) for v in line.split()) for line in lines[1:])
        return ButsonMatrix(m, n, rows), None
    except ValueError as exc:
        raise FormatError(f"bad matrix body: {exc}") from exc


def read_matrix(path: str | Path) -> tuple[ButsonMatrix, dict[str, Any] | None]:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))
