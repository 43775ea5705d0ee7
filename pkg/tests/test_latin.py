import itertools

import pytest
from hypothesis import given, strategies as st

from bhmat.errors import FormatError
from bhmat.latin import (
    LatinSquare,
    LatinTensor,
    all_latin_squares,
    are_lsesc,
    are_mols,
    classical_lsesc_set,
    classical_tensor_set,
    conjugate_lsesc_mols,
    dump_latin_set,
    encode,
    exhaustive_complete_lsesc,
    inflate,
    is_latin,
    parse_latin_set,
    read_latin_set,
    reconstruct,
    write_latin_set,
)

L2 = LatinSquare(2, ((1, 2), (2, 1)))
CYCLIC3 = LatinSquare(3, ((1, 2, 3), (2, 3, 1), (3, 1, 2)))


def agreement_counts(first, second):
    """Independent LSESC oracle: columns agreeing, per ordered row pair."""
    n = first.n
    return [
        sum(1 for j in range(n) if first.cells[i][j] == second.cells[k][j])
        for i in range(n)
        for k in range(n)
    ]


def square_strategy(n):
    """Random isotopes of the cyclic square of order n."""

    def build(row_perm, col_perm, sym_perm):
        cells = tuple(
            tuple((row_perm[i] + col_perm[j]) % n for j in range(n)) for i in range(n)
        )
        return LatinSquare(n, tuple(tuple(sym_perm[v] + 1 for v in row) for row in cells))

    return st.builds(
        build,
        st.permutations(range(n)),
        st.permutations(range(n)),
        st.permutations(range(n)),
    )


class TestIsLatin:
    def test_order2_square(self):
        assert is_latin(((1, 2), (2, 1)))

    def test_repeated_column_entries(self):
        assert not is_latin(((1, 1), (2, 2)))

    def test_cyclic_square(self):
        assert is_latin(((1, 2, 3), (2, 3, 1), (3, 1, 2)))

    def test_malformed_entries(self):
        with pytest.raises(ValueError):
            is_latin(((0, 1), (1, 0)))


class TestLsesc:
    def test_classical_q3_pair(self):
        first, second = classical_lsesc_set(3)
        assert all(c == 1 for c in agreement_counts(first, second))
        assert are_lsesc(first, second)

    def test_row_swapped_order2_pair_fails(self):
        other = LatinSquare(2, ((2, 1), (1, 2)))
        assert set(agreement_counts(L2, other)) == {0, 2}
        assert not are_lsesc(L2, other)

    def test_classical_q4_all_pairs(self):
        squares = classical_lsesc_set(4)
        for a, b in itertools.combinations(squares, 2):
            assert are_lsesc(a, b)

    def test_square_with_itself(self):
        assert not are_lsesc(CYCLIC3, CYCLIC3)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            are_lsesc(L2, CYCLIC3)


class TestMols:
    def test_cyclic_mols_order3(self):
        other = LatinSquare(3, ((1, 2, 3), (3, 1, 2), (2, 3, 1)))
        pairs = {
            (CYCLIC3.cells[i][j], other.cells[i][j])
            for i in range(3)
            for j in range(3)
        }
        assert len(pairs) == 9
        assert are_mols(CYCLIC3, other)

    def test_square_with_itself(self):
        assert not are_mols(CYCLIC3, CYCLIC3)

    def test_no_orthogonal_mate_at_order2(self):
        other = LatinSquare(2, ((2, 1), (1, 2)))
        assert not are_mols(L2, other)
        assert not are_mols(L2, L2)


class TestConjugation:
    def test_order2_self_conjugate(self):
        assert conjugate_lsesc_mols(L2) == L2

    def test_definition_cell_wise(self):
        square = classical_lsesc_set(3)[1]  # b = 2
        image = conjugate_lsesc_mols(square)
        for i in range(3):
            for j in range(3):
                a = square.cells[i][j]
                assert image.cells[a - 1][j] == i + 1

    @given(square_strategy(4))
    def test_involution(self, square):
        assert conjugate_lsesc_mols(conjugate_lsesc_mols(square)) == square

    @given(square_strategy(5), square_strategy(5))
    def test_duality_equivalence(self, first, second):
        lsesc = are_lsesc(first, second)
        mols = are_mols(conjugate_lsesc_mols(first), conjugate_lsesc_mols(second))
        assert lsesc == mols

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
    def test_classical_sets_are_lsesc_and_conjugate_mols(self, q):
        squares = classical_lsesc_set(q)
        assert len(squares) == q - 1
        conjugates = [conjugate_lsesc_mols(s) for s in squares]
        for a, b in itertools.combinations(range(len(squares)), 2):
            assert are_lsesc(squares[a], squares[b])
            assert are_mols(conjugates[a], conjugates[b])


class TestClassicalSet:
    def test_q2_matches_order2_square(self):
        assert classical_lsesc_set(2) == [L2]

    def test_not_prime_power(self):
        with pytest.raises(ValueError):
            classical_lsesc_set(6)

    def test_cap(self):
        with pytest.raises(ValueError):
            classical_lsesc_set(2**13)


class TestExhaustiveSearch:
    def test_order2(self):
        assert exhaustive_complete_lsesc(2) == [L2]

    def test_order3(self):
        family = exhaustive_complete_lsesc(3)
        assert family is not None and len(family) == 2
        assert are_lsesc(*family)

    def test_order4(self):
        family = exhaustive_complete_lsesc(4)
        assert family is not None and len(family) == 3
        for a, b in itertools.combinations(family, 2):
            assert are_lsesc(a, b)

    def test_cap(self):
        with pytest.raises(ValueError):
            exhaustive_complete_lsesc(5)


def frontal_slices(tensor):
    return tensor.slices


def horizontal_slices(tensor):
    n, size = tensor.n, tensor.size
    return [
        tuple(tuple(tensor.slices[k][i][j] for j in range(size)) for k in range(n))
        for i in range(size)
    ]


def lateral_slices(tensor):
    n, size = tensor.n, tensor.size
    return [
        tuple(tuple(tensor.slices[k][i][j] for k in range(n)) for i in range(size))
        for j in range(size)
    ]


def is_permutation_matrix(mat):
    return all(row.count(1) == 1 and row.count(0) == len(row) - 1 for row in mat) and all(
        col.count(1) == 1 for col in zip(*mat)
    )


def family_is_disjoint_permutations(mats):
    seen = set()
    for mat in mats:
        if not is_permutation_matrix(mat):
            return False
        for i, row in enumerate(mat):
            pos = (i, row.index(1))
            if pos in seen:
                return False
            seen.add(pos)
    return True


class TestEncode:
    def test_order2_slices(self):
        tensor = encode(L2)
        assert tensor.slices[0] == ((1, 0), (0, 1))
        assert tensor.slices[1] == ((0, 1), (1, 0))

    def test_slice_sums(self):
        tensor = encode(CYCLIC3)
        for sl in tensor.slices:
            assert all(sum(row) == 1 for row in sl)
            assert all(sum(col) == 1 for col in zip(*sl))

    def test_all_three_slice_families(self):
        squares = classical_lsesc_set(5) + list(all_latin_squares(4))
        for square in squares:
            tensor = encode(square)
            assert family_is_disjoint_permutations(frontal_slices(tensor))
            assert family_is_disjoint_permutations(horizontal_slices(tensor))
            assert family_is_disjoint_permutations(lateral_slices(tensor))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_round_trip_exhaustive(self, n):
        for square in all_latin_squares(n):
            assert reconstruct(encode(square)) == square


class TestInflate:
    def test_doubling_order2(self):
        doubled = inflate(encode(L2), 2)
        assert doubled.slices[0] == (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 1),
        )
        assert doubled.slices[1] == (
            (0, 1, 0, 0),
            (1, 0, 0, 0),
            (0, 0, 0, 1),
            (0, 0, 1, 0),
        )

    def test_identity_inflation(self):
        tensor = encode(CYCLIC3)
        assert inflate(tensor, 1) == tensor

    def test_slice_count_preserved(self):
        tensor = encode(CYCLIC3)
        assert inflate(tensor, 3).n == tensor.n
        assert inflate(tensor, 3).size == 3 * tensor.size

    def test_block_diagonal_structure(self):
        tensor = encode(CYCLIC3)
        big = inflate(tensor, 2)
        for small, large in zip(tensor.slices, big.slices):
            for i in range(3):
                for j in range(3):
                    assert large[i][j] == small[i][j]
                    assert large[3 + i][3 + j] == small[i][j]
                    assert large[i][3 + j] == 0
                    assert large[3 + i][j] == 0


class TestReconstruct:
    def test_example_tensor(self):
        tensor = LatinTensor(2, (((1, 0), (0, 1)), ((0, 1), (1, 0))))
        assert reconstruct(tensor) == L2

    def test_frontal_permutation_permutes_columns(self):
        # reordering the frontal slices reorders the columns of the square
        tensor = encode(CYCLIC3)
        shuffled = LatinTensor(3, (tensor.slices[2], tensor.slices[0], tensor.slices[1]))
        expected = tuple(
            tuple(CYCLIC3.cells[i][k] for k in (2, 0, 1)) for i in range(3)
        )
        assert reconstruct(shuffled).cells == expected

    def test_symbol_relabel_permutes_slice_columns(self):
        # relabelling symbols acts on the j axis, i.e. inside every slice
        relabel = {1: 2, 2: 3, 3: 1}
        relabelled = LatinSquare(
            3, tuple(tuple(relabel[v] for v in row) for row in CYCLIC3.cells)
        )
        tensor, target = encode(CYCLIC3), encode(relabelled)
        for k in range(3):
            for i in range(3):
                for j in range(3):
                    assert tensor.slices[k][i][j] == target.slices[k][i][relabel[j + 1] - 1]

    def test_rejects_inflated(self):
        with pytest.raises(ValueError):
            reconstruct(inflate(encode(L2), 2))

    def test_rejects_broken_tensor(self):
        with pytest.raises(ValueError):
            LatinTensor(2, (((1, 0), (0, 1)), ((1, 0), (0, 1))))  # not disjoint
        with pytest.raises(ValueError):
            LatinTensor(2, (((1, 1), (0, 0)), ((0, 0), (1, 1))))  # not permutations


class TestFiles:
    def test_round_trip(self, tmp_path):
        squares = classical_lsesc_set(4)
        path = tmp_path / "set.txt"
        write_latin_set(squares, path)
        assert read_latin_set(path) == squares

    def test_dump_format(self):
        text = dump_latin_set([L2])
        assert text == "L 2\n1 2\n2 1\n"

    def test_parse_errors(self):
        with pytest.raises(FormatError):
            parse_latin_set("Q 2\n1 2\n2 1\n")
        with pytest.raises(FormatError):
            parse_latin_set("L 2\n1 2\n")
        with pytest.raises(FormatError):
            parse_latin_set("L 2\n1 2\n2 x\n")
        with pytest.raises(FormatError):
            parse_latin_set("\n\n")
        with pytest.raises(FormatError):
            parse_latin_set("L 2\n1 1\n2 2\n")  # not Latin


def test_all_latin_squares_counts():
    assert sum(1 for _ in all_latin_squares(1)) == 1
    assert sum(1 for _ in all_latin_squares(2)) == 2
    assert sum(1 for _ in all_latin_squares(3)) == 12
    assert sum(1 for _ in all_latin_squares(4)) == 576


def test_classical_tensor_set_matches_squares():
    tensors = classical_tensor_set(3)
    squares = classical_lsesc_set(3)
    assert [reconstruct(t) for t in tensors] == squares
