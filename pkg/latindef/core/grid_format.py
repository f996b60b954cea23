"""
Text grid format: a header line "n k" followed by n lines of n
whitespace-separated tokens, each a color in 1..k or "." for an Empty cell.
"""

from pathlib import Path
from typing import Optional

from latindef._config import MAX_COLORS, MAX_ORDER
from latindef._exceptions import GridParseError
from latindef._logger import logger
from latindef.core.partial_coloring import PartialColoring

EMPTY_TOKEN = "."


def _parse_int(token: str, what: str, line_number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        logger.error(f"Line {line_number}: bad {what} token {token!r}")
        raise GridParseError(
            f"line {line_number}: {what} must be a decimal integer, "
            f"got {token!r}"
        )
    return int(token)


def _parse_header(line: str) -> tuple[int, int]:
    tokens = line.split()
    if len(tokens) != 2:
        logger.error(f"Bad header line: {line!r}")
        raise GridParseError(f"line 1: expected 'n k', got {line!r}")
    order = _parse_int(tokens[0], "order", 1)
    num_colors = _parse_int(tokens[1], "color count", 1)
    if order < 1 or num_colors < 1:
        raise GridParseError("line 1: n and k must be positive")
    if order > MAX_ORDER or num_colors > MAX_COLORS:
        logger.error(f"Header {line!r} exceeds the supported limits")
        raise GridParseError(
            f"line 1: n must be at most {MAX_ORDER} and k at most "
            f"{MAX_COLORS}, got n={order}, k={num_colors}"
        )
    return order, num_colors


def _parse_row(
    line: str, order: int, num_colors: int, line_number: int
) -> list[Optional[int]]:
    tokens = line.split()
    if len(tokens) != order:
        logger.error(f"Line {line_number} has {len(tokens)} tokens")
        raise GridParseError(
            f"line {line_number}: expected {order} tokens, got {len(tokens)}"
        )
    row: list[Optional[int]] = []
    for token in tokens:
        if token == EMPTY_TOKEN:
            row.append(None)
            continue
        color = _parse_int(token, "color", line_number)
        if not 1 <= color <= num_colors:
            logger.error(f"Line {line_number}: color {color} out of range")
            raise GridParseError(
                f"line {line_number}: color {color} not in 1..{num_colors}"
            )
        row.append(color)
    return row


def parse_grid(text: str) -> PartialColoring:
    """
    Parse a partial coloring from the text grid format.

    Args:
        text (str): The grid text. Trailing whitespace and trailing blank
            lines are ignored.

    Returns:
        PartialColoring: The parsed coloring.

    Raises:
        GridParseError: If the text does not follow the format.
        ImproperColoringError: If the grid parses but repeats a color in a
            row or column.
    """
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise GridParseError("empty grid text")

    order, num_colors = _parse_header(lines[0])
    body = lines[1:]
    if len(body) != order:
        logger.error(f"Expected {order} grid lines, got {len(body)}")
        raise GridParseError(
            f"expected {order} grid lines after the header, got {len(body)}"
        )
    rows = [
        _parse_row(line, order, num_colors, line_number)
        for line_number, line in enumerate(body, start=2)
    ]
    return PartialColoring.from_rows(rows, num_colors)


def format_grid(pc: PartialColoring) -> str:
    """Render a coloring in the text grid format, newline-terminated."""
    return f"{pc.order} {pc.num_colors}\n{pc}\n"


def read_grid(file_path: Path) -> PartialColoring:
    """
    Read and parse a grid file.

    Raises:
        GridParseError: If the file cannot be read or does not parse.
    """
    try:
        text = file_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Error reading grid file: {e}")
        raise GridParseError(f"cannot read {file_path}") from e
    return parse_grid(text)


def write_grid(pc: PartialColoring, output_path: Path) -> None:
    """Write a coloring to a file in the text grid format."""
    with output_path.open("w", encoding="utf-8") as f:
        f.write(format_grid(pc))
