from dataclasses import dataclass, field
from fractions import Fraction

Cell = str | int | float | Fraction | None


@dataclass
class ReportTable:
    """Rows of one subcommand, built completely before anything is written.

    Attributes:
        columns: Column names, in output order.
        rows: One tuple of raw values per row; fractions are rounded only when written.
        legend: ``(code, layer name)`` pairs for tables with combination labels.
    """

    columns: tuple[str, ...]
    rows: list[tuple[Cell, ...]] = field(default_factory=list)
    legend: list[tuple[str, str]] | None = None

    def add(self, *values: Cell) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(values)

    def __len__(self) -> int:
        return len(self.rows)
