import random
from pathlib import Path

import pytest

from latindef.core import PartialColoring, read_grid


@pytest.fixture(scope="session")
def test_files_dir():
    return Path(__file__).parent / "test_files"


@pytest.fixture
def five_eight(test_files_dir) -> PartialColoring:
    """The 17-entry coloring that uniquely extends to L(5, 8)."""
    return read_grid(test_files_dir / "five_eight.txt")


@pytest.fixture
def five_eight_completion(test_files_dir) -> PartialColoring:
    return read_grid(test_files_dir / "five_eight_completion.txt")


@pytest.fixture
def block_ten(test_files_dir) -> PartialColoring:
    return read_grid(test_files_dir / "block_ten.txt")


@pytest.fixture
def block_ten_completion(test_files_dir) -> PartialColoring:
    return read_grid(test_files_dir / "block_ten_completion.txt")


@pytest.fixture
def order_four_example(test_files_dir) -> PartialColoring:
    return read_grid(test_files_dir / "order_four_example.txt")


@pytest.fixture
def chain_grid(test_files_dir) -> PartialColoring:
    """
    A 4 x 4, k = 5 coloring with a(1,1) = {1}, a(1,2) = {1,2},
    a(2,2) = {2,3} and (2,3) Empty.
    """
    return read_grid(test_files_dir / "lemma3_chain.txt")


@pytest.fixture
def latin_five() -> PartialColoring:
    """The cyclic Latin square of order 5."""
    return PartialColoring.from_rows(
        [[(row + col) % 5 + 1 for col in range(5)] for row in range(5)], 5
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20241017)


def random_permutation(rng: random.Random, size: int) -> list[int]:
    values = list(range(1, size + 1))
    rng.shuffle(values)
    return values


def random_partial(
    rng: random.Random, square: PartialColoring, keep: int
) -> PartialColoring:
    """Keep `keep` random cells of a completed square colored."""
    cells = [position for position, _ in square.entries()]
    return square.keep_only(rng.sample(cells, keep))
