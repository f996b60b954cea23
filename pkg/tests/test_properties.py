"""
Seeded randomized checks of the solver, the detectors and the bounds
against brute force.
"""

from functools import lru_cache
from itertools import islice, permutations, product

import numpy as np
import pytest

from conftest import random_partial, random_permutation
from latindef._exceptions import ImproperColoringError
from latindef.constructions import construct_2n_minus_1
from latindef.core import PartialColoring, Position, read_grid
from latindef.patterns import (
    check_uncolored_bound,
    detect_all,
    detect_rectangle,
    detect_three_in_line,
)
from latindef.search import canonical_representatives, iter_all_squares
from latindef.solver import Verdict, count_extensions, enumerate_extensions

pytestmark = pytest.mark.slow

CORPUS = [
    "five_eight.txt",
    "block_ten.txt",
    "order_four_example.txt",
    "lemma3_chain.txt",
    "rectangle.txt",
    "three_in_row.txt",
]


@lru_cache(maxsize=None)
def brute_force_squares(order: int, num_colors: int) -> np.ndarray:
    """Every member of L(n, k) as a flat row, built without the solver."""
    rows = list(permutations(range(1, num_colors + 1), order))
    squares = [
        [color for row in square for color in row]
        for square in product(rows, repeat=order)
        if all(
            len({row[col] for row in square}) == order
            for col in range(order)
        )
    ]
    return np.array(squares, dtype=np.int16)


def oracle_verdict(pc: PartialColoring) -> tuple[Verdict, int]:
    squares = brute_force_squares(pc.order, pc.num_colors)
    flat = np.array(pc.flat(), dtype=np.int16)
    colored = flat > 0
    matches = (squares[:, colored] == flat[colored]).all(axis=1)
    count = int(matches.sum())
    if count == 0:
        return Verdict.NONE, count
    return (Verdict.UNIQUE if count == 1 else Verdict.MULTIPLE), count


def random_square(rng, pool: list[PartialColoring]) -> PartialColoring:
    square = rng.choice(pool)
    return square.permute(
        random_permutation(rng, square.order),
        random_permutation(rng, square.order),
    ).relabel(random_permutation(rng, square.num_colors))


def assert_unique_coloring_is_clean(pc: PartialColoring) -> None:
    assert detect_all(pc) == []
    assert check_uncolored_bound(pc)


class TestSoundness:
    def test_order_five(self, rng, five_eight_completion):
        pool = [five_eight_completion]
        for _ in range(5_000):
            square = random_square(rng, pool)
            pc = random_partial(rng, square, rng.randint(15, 25))
            if count_extensions(pc).is_unique:
                assert_unique_coloring_is_clean(pc)

    def test_order_four(self, rng):
        pool = list(islice(iter_all_squares(4, 6), 500))
        for _ in range(5_000):
            square = random_square(rng, pool)
            pc = random_partial(rng, square, rng.randint(8, 16))
            if count_extensions(pc).is_unique:
                assert_unique_coloring_is_clean(pc)


class TestOracle:
    @pytest.mark.parametrize(
        "n, k", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 4)]
    )
    def test_matches_brute_force(self, rng, n, k):
        pool = [
            PartialColoring.from_rows(
                np.asarray(flat).reshape(n, n).tolist(), k
            )
            for flat in brute_force_squares(n, k)
        ]
        for _ in range(150):
            square = rng.choice(pool)
            pc = random_partial(rng, square, rng.randint(0, n * n))
            # Sometimes add a cell from another square, which may leave
            # no completion at all.
            other = rng.choice(pool)
            position = Position(rng.randint(1, n), rng.randint(1, n))
            if pc.is_empty(position):
                try:
                    pc = pc.with_color(position, other.color_at(position))
                except ImproperColoringError:
                    pass

            report = count_extensions(pc)
            expected, count = oracle_verdict(pc)

            assert report.verdict is expected
            assert len(enumerate_extensions(pc, 3)) == min(count, 3)
            assert report.solutions_found == min(count, 2)
            if expected is Verdict.UNIQUE:
                flat = report.completion.flat()
                matches = (
                    brute_force_squares(n, k) == np.array(flat)
                ).all(axis=1)
                assert matches.any()


def assert_verdict_survives_symmetry(rng, pc: PartialColoring) -> None:
    report = count_extensions(pc)
    has_line = detect_three_in_line(pc) is not None
    has_rectangle = detect_rectangle(pc) is not None
    kinds = {witness.pattern for witness in detect_all(pc)}

    for _ in range(100):
        row_perm = random_permutation(rng, pc.order)
        col_perm = random_permutation(rng, pc.order)
        colors = random_permutation(rng, pc.num_colors)
        moved = pc.permute(row_perm, col_perm).relabel(colors)

        moved_report = count_extensions(moved)

        assert moved_report.verdict is report.verdict
        if report.is_unique:
            assert moved_report.completion == (
                report.completion.permute(row_perm, col_perm).relabel(colors)
            )
        assert (detect_three_in_line(moved) is not None) == has_line
        assert (detect_rectangle(moved) is not None) == has_rectangle
        assert {witness.pattern for witness in detect_all(moved)} == kinds


class TestSymmetryInvariance:
    @pytest.mark.parametrize("file_name", CORPUS)
    def test_verdict_survives_permutation(
        self, rng, test_files_dir, file_name
    ):
        assert_verdict_survives_symmetry(
            rng, read_grid(test_files_dir / file_name)
        )

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_2n_minus_1_survives_permutation(self, rng, n):
        assert_verdict_survives_symmetry(rng, construct_2n_minus_1(n))


def _all_partials(square: PartialColoring):
    cells = [position for position, _ in square.entries()]
    for mask in range(1 << len(cells)):
        yield square.keep_only(
            cell for bit, cell in enumerate(cells) if mask >> bit & 1
        )


class TestExhaustiveSmallOrders:
    def test_order_three_four_colors(self):
        for square in canonical_representatives(3, 4):
            for pc in _all_partials(square):
                report = count_extensions(pc)
                assert report.verdict is oracle_verdict(pc)[0]
                if report.is_unique:
                    assert_unique_coloring_is_clean(pc)

    @pytest.mark.parametrize("n", [2, 3])
    def test_2n_minus_1_needs_n_colored_off_cells(self, n):
        for square in canonical_representatives(n, 2 * n - 1):
            for pc in _all_partials(square):
                if pc.uncolored_count > n:
                    assert not count_extensions(pc).is_unique

    @pytest.mark.parametrize("n", [4, 5])
    def test_2n_minus_1_random_samples(self, rng, n):
        pool = list(islice(iter_all_squares(n, 2 * n - 1), 300))
        for _ in range(1_000):
            square = random_square(rng, pool)
            pc = random_partial(rng, square, rng.randint(0, n * n - n - 1))

            assert not count_extensions(pc).is_unique
