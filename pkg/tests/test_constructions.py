import numpy as np
import pytest

from latindef._exceptions import (
    ConstructionError,
    NotMultipleOfTenError,
    OddOrderError,
    UnsupportedConstructionError,
)
from latindef.constructions import (
    ConstructionKind,
    ConstructionSpec,
    build_construction,
    construct,
    construct_2n_minus_1,
    construct_block_ten_m,
    construct_five_eight,
    cyclic_block,
    make_correspondence,
)
from latindef.constructions.block_ten_m import base_square
from latindef.constructions.two_n_minus_one import residue
from latindef.core import Position
from latindef.solver import count_extensions


class TestTwoNMinusOne:
    def test_order_two(self):
        assert construct_2n_minus_1(2).to_rows() == [[None, 3], [1, None]]

    def test_order_four(self):
        assert construct_2n_minus_1(4).to_rows() == [
            [None, 7, 5, 6],
            [3, None, 6, 5],
            [1, 2, None, 7],
            [2, 1, 3, None],
        ]

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
    def test_unique_with_diagonal_n(self, n):
        pc = construct_2n_minus_1(n)

        report = count_extensions(pc)

        assert pc.num_colors == 2 * n - 1
        assert pc.colored_count == n * n - n
        assert pc.uncolored_cells() == [
            Position(i, i) for i in range(1, n + 1)
        ]
        assert report.is_unique
        assert np.all(np.diag(report.completion.cells) == n)

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
    def test_row_col_union_misses_only_n(self, n):
        pc = construct_2n_minus_1(n)
        expected = set(range(1, 2 * n)) - {n}

        for i in range(1, n + 1):
            assert set(pc.row_colors(i) | pc.col_colors(i)) == expected

    def test_odd_order(self):
        with pytest.raises(OddOrderError):
            construct_2n_minus_1(5)

    def test_order_zero(self):
        with pytest.raises(ConstructionError):
            construct_2n_minus_1(0)

    def test_residue_maps_zero_to_modulus(self):
        assert residue(6, 3) == 3
        assert residue(7, 3) == 1
        assert residue(5, 1) == 1


class TestFiveEight:
    def test_matches_fixture(self, five_eight):
        assert construct_five_eight() == five_eight

    def test_unique(self, five_eight_completion):
        report = count_extensions(construct_five_eight())

        assert report.completion == five_eight_completion

    def test_eight_empty_cells(self):
        assert construct_five_eight().uncolored_count == 8 * 5 // 5


class TestCorrespondence:
    def test_order_ten(self):
        f = make_correspondence(10)

        assert f[2] == (1, 2, 3, 4, 5, 6, 7, 8)
        assert f[1] == (9, 10, 11, 12, 13)
        assert f[3] == (14, 15, 16, 17, 18)

    def test_order_twenty(self):
        f = make_correspondence(20)

        assert f[4] == tuple(range(1, 9))
        assert f[1] == tuple(range(9, 14))
        assert f[2] == tuple(range(14, 19))
        assert f[3] == tuple(range(19, 24))
        assert f[5] == tuple(range(24, 29))
        assert f[6] == tuple(range(29, 34))
        assert f[7] == tuple(range(34, 39))

    @pytest.mark.parametrize("n", [10, 20, 30, 40])
    def test_images_partition_the_colors(self, n):
        f = make_correspondence(n)
        colors = [color for image in f.images.values() for color in image]

        assert sorted(colors) == list(range(1, 2 * n - 1))
        assert len(f.images) == 2 * n // 5 - 1

    @pytest.mark.parametrize("n", [5, 15, 0, -10])
    def test_not_multiple_of_ten(self, n):
        with pytest.raises(NotMultipleOfTenError):
            make_correspondence(n)


class TestBlockTenM:
    def test_cyclic_block(self):
        block = cyclic_block((9, 10, 11, 12, 13))

        assert block[0].tolist() == [9, 10, 11, 12, 13]
        assert block[1].tolist() == [10, 11, 12, 13, 9]
        assert block[4].tolist() == [13, 9, 10, 11, 12]

    def test_cyclic_block_is_rainbow(self):
        block = cyclic_block((14, 15, 16, 17, 18))

        for line in list(block) + list(block.T):
            assert sorted(line.tolist()) == [14, 15, 16, 17, 18]

    def test_base_square_for_ten(self):
        assert base_square(2).tolist() == [[2, 1], [3, 2]]

    def test_order_ten_matches_fixture(self, block_ten):
        assert construct_block_ten_m(10) == block_ten

    def test_order_ten_unique(self, block_ten_completion):
        pc = construct_block_ten_m(10)

        report = count_extensions(pc)

        assert pc.uncolored_count == 16
        assert report.completion == block_ten_completion

    def test_order_twenty_unique(self):
        pc = construct_block_ten_m(20)

        report = count_extensions(pc)

        assert pc.num_colors == 38
        assert pc.uncolored_count == 32
        assert pc.colored_count == 400 - 32
        assert report.is_unique

    def test_not_multiple_of_ten(self):
        with pytest.raises(NotMultipleOfTenError):
            construct_block_ten_m(25)


class TestConstructionSpec:
    @pytest.mark.parametrize(
        "spec, error",
        [
            (
                ConstructionSpec(ConstructionKind.TWO_N_MINUS_ONE, 3),
                OddOrderError,
            ),
            (
                ConstructionSpec(ConstructionKind.TWO_N_MINUS_ONE, 0),
                UnsupportedConstructionError,
            ),
            (
                ConstructionSpec(ConstructionKind.FIVE_EIGHT, 6),
                UnsupportedConstructionError,
            ),
            (
                ConstructionSpec(ConstructionKind.BLOCK_TEN_M, 15),
                NotMultipleOfTenError,
            ),
            (
                ConstructionSpec(ConstructionKind.BLOCK_TEN_M),
                UnsupportedConstructionError,
            ),
        ],
    )
    def test_invalid(self, spec, error):
        with pytest.raises(error):
            build_construction(spec)

    def test_five_eight_defaults_to_order_five(self):
        spec = ConstructionSpec(ConstructionKind.FIVE_EIGHT)

        assert spec.order == 5
        assert spec.num_colors == 8

    def test_num_colors(self):
        assert (
            ConstructionSpec(ConstructionKind.TWO_N_MINUS_ONE, 4).num_colors
            == 7
        )
        assert (
            ConstructionSpec(ConstructionKind.BLOCK_TEN_M, 10).num_colors
            == 18
        )

    @pytest.mark.parametrize(
        "kind, n, colored",
        [
            ("two-n-minus-one", 4, 12),
            ("five-eight", None, 17),
            ("block-ten-m", 10, 84),
        ],
    )
    def test_construct_by_name(self, kind, n, colored):
        assert construct(kind, n).colored_count == colored

    def test_invalid_construction_is_logged(self, mocker):
        mock_logger = mocker.patch("latindef.constructions.logger")

        with pytest.raises(OddOrderError):
            construct("two-n-minus-one", 7)

        mock_logger.error.assert_called_once()
