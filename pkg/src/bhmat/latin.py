"""Latin squares, the LSESC and MOLS predicates, and tensor encodings.

Two squares are eligible for the row-indexed construction ("LSESC") when
every pair of rows, one from each square, agrees in exactly one column.
Conjugating every square (swap symbol and row index) turns such a family
into mutually orthogonal Latin squares and back, so both notions are
carried here side by side.

Squares always use the symbol set {1..n}.  The classical complete families
come from GF(q): the square for a nonzero field element b has cell (i, j)
equal to the enumeration index of x_i + b*x_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .errors import FormatError
from .galois import (
    enumerate_elements,
    element_value,
    field_add,
    field_mul,
    make_field,
    prime_power,
)

CLASSICAL_ORDER_CAP = 2**12


@dataclass(frozen=True)
class LatinSquare:
    """Order-n square over symbols {1..n}; validated on construction."""

    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if len(cells) != self.n or any(len(row) != self.n for row in cells):
            raise ValueError(f"cells must form an {self.n}x{self.n} array")
        if not is_latin(cells):
            raise ValueError("not a Latin square")


@dataclass(frozen=True)
class LatinTensor:
    """Stack of n disjoint permutation matrices (the frontal slices).

    For an encoded square the slice for column k sends row i to column
    l_ik; inflated tensors keep the same slice count but blow each slice up
    block-diagonally, so slices may be larger than n x n.
    """

    n: int
    slices: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        slices = tuple(
            tuple(tuple(int(v) for v in row) for row in sl) for sl in self.slices
        )
        object.__setattr__(self, "slices", slices)
        if len(slices) != self.n:
            raise ValueError(f"expected {self.n} frontal slices, got {len(slices)}")
        seen: set[tuple[int, int]] = set()
        for sl in slices:
            if not _is_permutation_matrix(sl, self.size):
                raise ValueError("every frontal slice must be a permutation matrix")
            for i, row in enumerate(sl):
                j = row.index(1)
                if (i, j) in seen:
                    raise ValueError("frontal slices must be pairwise disjoint")
                seen.add((i, j))

    @property
    def size(self) -> int:
        return len(self.slices[0])

    def row_images(self, slice_index: int) -> tuple[int, ...]:
        """0-based map i -> j of the 1-entries of slice slice_index (1-based)."""
        return tuple(row.index(1) for row in self.slices[slice_index - 1])


def _is_permutation_matrix(mat: Sequence[Sequence[int]], size: int) -> bool:
    if len(mat) != size or any(len(row) != size for row in mat):
        return False
    col_seen = [False] * size
    for row in mat:
        ones = 0
        for j, v in enumerate(row):
            if v == 1:
                ones += 1
                if col_seen[j]:
                    return False
                col_seen[j] = True
            elif v != 0:
                return False
        if ones != 1:
            return False
    return True


def is_latin(cells: Sequence[Sequence[int]]) -> bool:
    """True iff every symbol 1..n occurs exactly once per row and per column."""
    n = len(cells)
    symbols = set(range(1, n + 1))
    for row in cells:
        if len(row) != n:
            raise ValueError("ragged array")
        if any(not (1 <= v <= n) for v in row):
            raise ValueError(f"entries must lie in 1..{n}")
        if set(row) != symbols:
            return False
    for j in range(n):
        if {cells[i][j] for i in range(n)} != symbols:
            return False
    return True


def are_lsesc(first: LatinSquare, second: LatinSquare) -> bool:
    """Every row pair (one row from each square) agrees in exactly one column.

    A square paired with itself always fails: identical rows agree in every
    column.
    """
    if first.n != second.n:
        raise ValueError(f"order mismatch: {first.n} vs {second.n}")
    n = first.n
    for row_a in first.cells:
        for row_b in second.cells:
            agreements = sum(1 for j in range(n) if row_a[j] == row_b[j])
            if agreements != 1:
                return False
    return True


def are_mols(first: LatinSquare, second: LatinSquare) -> bool:
    """True iff superimposing the squares yields all n^2 ordered symbol pairs."""
    if first.n != second.n:
        raise ValueError(f"order mismatch: {first.n} vs {second.n}")
    n = first.n
    pairs = {
        (first.cells[i][j], second.cells[i][j]) for i in range(n) for j in range(n)
    }
    return len(pairs) == n * n


def conjugate_lsesc_mols(square: LatinSquare) -> LatinSquare:
    """Swap the roles of symbol and row index; an involution.

    The image square has cell (a, j) = i exactly when the input has cell
    (i, j) = a, i.e. each column is replaced by its inverse permutation.
    """
    n = square.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[square.cells[i][j] - 1][j] = i + 1
    return LatinSquare(n, tuple(tuple(row) for row in out))


def classical_lsesc_set(q: int) -> list[LatinSquare]:
    """The q-1 squares with cells x_i + b*x_j over GF(q), one per nonzero b."""
    decomposition = prime_power(q)
    if decomposition is None:
        raise ValueError(f"{q} is not a prime power")
    if q > CLASSICAL_ORDER_CAP:
        raise ValueError(f"order {q} exceeds cap {CLASSICAL_ORDER_CAP}")
    p, r = decomposition
    field = make_field(p, r)
    elements = enumerate_elements(field)
    squares = []
    for b in elements[1:]:
        cells = tuple(
            tuple(
                element_value(field, field_add(field, x_i, field_mul(field, b, x_j)))
                + 1
                for x_j in elements
            )
            for x_i in elements
        )
        squares.append(LatinSquare(q, cells))
    return squares


def classical_tensor_set(q: int) -> list[LatinTensor]:
    return [encode(square) for square in classical_lsesc_set(q)]


def all_latin_squares(n: int) -> Iterator[LatinSquare]:
    """All order-n Latin squares in lexicographic order of the flattened cells."""
    cells: list[list[int]] = [[0] * n for _ in range(n)]
    col_used = [set() for _ in range(n)]

    def fill(pos: int) -> Iterator[LatinSquare]:
        if pos == n * n:
            yield LatinSquare(n, tuple(tuple(row) for row in cells))
            return
        i, j = divmod(pos, n)
        row_used = set(cells[i][:j])
        for symbol in range(1, n + 1):
            if symbol in row_used or symbol in col_used[j]:
                continue
            cells[i][j] = symbol
            col_used[j].add(symbol)
            yield from fill(pos + 1)
            col_used[j].remove(symbol)
        cells[i][j] = 0

    return fill(0)


def exhaustive_complete_lsesc(n: int) -> list[LatinSquare] | None:
    """Brute-force search for n-1 pairwise-LSESC squares of order n (n <= 4).

    Returns the first family found when squares are tried in lexicographic
    cell order, or None if no family exists.  This is a test oracle, not a
    construction: general complete families come from classical_lsesc_set.
    """
    if n > 4:
        raise ValueError("exhaustive search is capped at order 4")
    if n < 1:
        raise ValueError("order must be positive")
    squares = list(all_latin_squares(n))
    target = n - 1
    if target == 0:
        return []

    def extend(chosen: list[LatinSquare], start: int) -> list[LatinSquare] | None:
        if len(chosen) == target:
            return chosen
        for idx in range(start, len(squares)):
            candidate = squares[idx]
            if all(are_lsesc(prev, candidate) for prev in chosen):
                found = extend(chosen + [candidate], idx + 1)
                if found is not None:
                    return found
        return None

    return extend([], 0)


def encode(square: LatinSquare) -> LatinTensor:
    """Tensor of frontal slices, one per column: slice k sends row i to l_ik."""
    n = square.n
    slices = tuple(
        tuple(
            tuple(1 if square.cells[i][k] == j + 1 else 0 for j in range(n))
            for i in range(n)
        )
        for k in range(n)
    )
    return LatinTensor(n, slices)


def inflate(tensor: LatinTensor, m: int) -> LatinTensor:
    """Blow each frontal slice X_k up to the block diagonal I_m (x) X_k."""
    if m < 1:
        raise ValueError(f"inflation factor must be positive, got {m}")
    size = tensor.size
    big = size * m
    out_slices = []
    for sl in tensor.slices:
        big_slice = [[0] * big for _ in range(big)]
        for block in range(m):
            base = block * size
            for i in range(size):
                for j in range(size):
                    big_slice[base + i][base + j] = sl[i][j]
        out_slices.append(tuple(tuple(row) for row in big_slice))
    return LatinTensor(tensor.n, tuple(out_slices))


def reconstruct(tensor: LatinTensor) -> LatinSquare:
    """Recover the square from a cubic tensor: cell (i, k) is the symbol slice k maps row i to."""
    if tensor.size != tensor.n:
        raise ValueError("only cubic (non-inflated) tensors encode a Latin square")
    n = tensor.n
    cells = tuple(
        tuple(tensor.slices[k][i].index(1) + 1 for k in range(n)) for i in range(n)
    )
    return LatinSquare(n, cells)


def write_latin_set(squares: Sequence[LatinSquare], path: str | Path) -> None:
    Path(path).write_text(dump_latin_set(squares), encoding="utf-8")


def dump_latin_set(squares: Sequence[LatinSquare]) -> str:
    blocks = []
    for square in squares:
        lines = [f"L {square.n}"]
        lines.extend(" ".join(str(v) for v in row) for row in square.cells)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def read_latin_set(path: str | Path) -> list[LatinSquare]:
    return parse_latin_set(Path(path).read_text(encoding="utf-8"))


def parse_latin_set(text: str) -> list[LatinSquare]:
    squares = []
    for block in text.split("\n\n"):
        lines = [line for line in block.splitlines() if line.strip()]
        if not lines:
            continue
        header = lines[0].split()
        if len(header) != 2 or header[0] != "L":
            raise FormatError(f"expected 'L n' header, got {lines[0]!r}")
        try:
            n = int(header[1])
        except ValueError as exc:
            raise FormatError(f"bad order in header {lines[0]!r}") from exc
        if len(lines) != n + 1:
            raise FormatError(f"square of order {n} needs {n} rows, got {len(lines) - 1}")
        try:
            cells = tuple(
                tuple(int(v) for v in line.split()) for line in lines[1 : n + 1]
            )
            squares.append(LatinSquare(n, cells))
        except ValueError as exc:
            raise FormatError(f"bad square block: {exc}") from exc
    if not squares:
        raise FormatError("no Latin squares in file")
    return squares
