import pytest

from latindef.core import PartialColoring
from latindef.solver import (
    ExtensionSolver,
    Verdict,
    count_extensions,
    enumerate_extensions,
    initialize_solver,
    iter_extensions,
)


def _agrees(completion: PartialColoring, pc: PartialColoring) -> bool:
    return all(
        completion.color_at(position) == color
        for position, color in pc.entries()
    )


class TestCountExtensions:
    def test_five_eight_is_unique(self, five_eight, five_eight_completion):
        report = count_extensions(five_eight)

        assert report.verdict is Verdict.UNIQUE
        assert report.is_unique
        assert report.completion == five_eight_completion

    def test_one_by_one_one_color(self):
        report = count_extensions(PartialColoring.empty(1, 1))

        assert report.verdict is Verdict.UNIQUE
        assert report.completion.to_rows() == [[1]]

    def test_one_by_one_two_colors(self):
        report = count_extensions(PartialColoring.empty(1, 2))

        assert report.verdict is Verdict.MULTIPLE
        assert len(report.witnesses) == 2
        assert report.witnesses[0] != report.witnesses[1]

    def test_two_by_two_three_colors(self):
        pc = PartialColoring.empty(2, 3)

        report = count_extensions(pc)

        assert report.verdict is Verdict.MULTIPLE
        for witness in report.witnesses:
            assert witness.is_complete()
            assert _agrees(witness, pc)

    def test_no_completion(self):
        # (1,2) sees 1 in its row and 2 in its column, and k = 2.
        pc = PartialColoring.from_rows([[1, None], [None, 2]], 2)

        report = count_extensions(pc)

        assert report.verdict is Verdict.NONE
        assert report.completion is None
        assert report.witnesses == ()

    def test_order_four_defining_set(self, order_four_example):
        assert count_extensions(order_four_example).is_unique

    def test_block_ten_is_unique(self, block_ten, block_ten_completion):
        report = count_extensions(block_ten)

        assert report.is_unique
        assert report.completion == block_ten_completion

    def test_cap_below_two(self, five_eight):
        with pytest.raises(ValueError):
            count_extensions(five_eight, cap=1)

    def test_node_budget_aborts(self):
        report = count_extensions(
            PartialColoring.empty(4, 7), cap=1000, node_budget=5
        )

        assert report.verdict is Verdict.ABORTED
        assert report.completion is None

    def test_larger_cap_still_counts(self):
        report = count_extensions(PartialColoring.empty(1, 3), cap=10)

        assert report.verdict is Verdict.MULTIPLE
        assert report.solutions_found == 3

    def test_many_empty_cells(self):
        report = count_extensions(PartialColoring.empty(40, 79))

        assert report.verdict is Verdict.MULTIPLE
        first, second = report.witnesses
        assert first != second
        assert first.is_complete() and second.is_complete()

    def test_node_budget_is_a_hard_limit(self):
        solver = ExtensionSolver(node_budget=5)

        report = solver.count_extensions(
            PartialColoring.empty(4, 7), cap=1000
        )

        assert report.verdict is Verdict.ABORTED
        assert report.nodes_explored == solver.nodes == 5

    def test_to_dict(self, five_eight):
        data = count_extensions(five_eight).to_dict()

        assert data["verdict"] == "unique"
        assert data["completion"][0] == [1, 3, 7, 8, 4]
        assert data["witnesses"] == []
        assert data["nodes"] >= 1


class TestEnumerateExtensions:
    def test_five_eight(self, five_eight):
        assert len(enumerate_extensions(five_eight, 10)) == 1

    def test_one_by_one_three_colors(self):
        squares = enumerate_extensions(PartialColoring.empty(1, 3), 10)

        assert [square.to_rows() for square in squares] == [
            [[1]],
            [[2]],
            [[3]],
        ]

    def test_two_by_two_latin_squares(self):
        squares = enumerate_extensions(PartialColoring.empty(2, 2), 10)

        assert [square.to_rows() for square in squares] == [
            [[1, 2], [2, 1]],
            [[2, 1], [1, 2]],
        ]

    def test_lexicographic_order(self):
        squares = enumerate_extensions(PartialColoring.empty(2, 3), 100)

        keys = [square.sort_key() for square in squares]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        # 3 * 2 choices for row 1, then 3 for row 2.
        assert len(squares) == 18

    def test_cap(self):
        assert len(enumerate_extensions(PartialColoring.empty(2, 3), 4)) == 4

    def test_cap_below_one(self):
        with pytest.raises(ValueError):
            enumerate_extensions(PartialColoring.empty(1, 1), 0)

    def test_iter_extensions_is_lazy(self):
        iterator = iter_extensions(PartialColoring.empty(3, 5))

        first = next(iterator)

        assert first.to_rows()[0] == [1, 2, 3]


class TestExtensionSolver:
    def test_initialize_solver_reads_settings(self, monkeypatch):
        monkeypatch.setenv("LATINDEF_NODE_BUDGET", "77")
        monkeypatch.setenv("LATINDEF_WORKERS", "3")

        solver = initialize_solver()

        assert solver.node_budget == 77
        assert solver.workers == 3

    def test_explicit_arguments_win(self, monkeypatch):
        monkeypatch.setenv("LATINDEF_NODE_BUDGET", "77")

        solver = initialize_solver(node_budget=5, workers=1)

        assert solver.node_budget == 5
        assert solver.workers == 1

    def test_nodes_are_counted(self, five_eight):
        solver = ExtensionSolver()

        report = solver.count_extensions(five_eight)

        assert report.nodes_explored == solver.nodes >= 1

    def test_parallel_matches_sequential(self, five_eight):
        pc = five_eight.keep_only(
            [position for position, _ in five_eight.entries()[:-3]]
        )
        sequential = ExtensionSolver().count_extensions(pc)

        parallel = ExtensionSolver(workers=2).count_extensions(pc)

        assert parallel.verdict is sequential.verdict

    def test_parallel_unique(self, five_eight, five_eight_completion):
        report = ExtensionSolver(workers=2).count_extensions(five_eight)

        assert report.is_unique
        assert report.completion == five_eight_completion

    def test_parallel_budget_too_small_to_split(self):
        solver = ExtensionSolver(node_budget=3, workers=2)

        report = solver.count_extensions(PartialColoring.empty(4, 4))

        assert report.verdict is Verdict.ABORTED
        assert report.nodes_explored <= 3

    def test_parallel_budget_is_shared(self):
        solver = ExtensionSolver(node_budget=1000, workers=2)

        report = solver.count_extensions(PartialColoring.empty(4, 4))

        assert report.verdict is Verdict.MULTIPLE
        assert report.nodes_explored <= 1000

    def test_iter_extensions_on_many_empty_cells(self):
        first = next(iter_extensions(PartialColoring.empty(40, 79)))

        assert first.is_complete()
        assert first.to_rows()[0] == list(range(1, 41))
