import csv
import io
import json
import sys
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Any

from pyadvtools import write_list

from .basic_input import BasicInput
from .report_table import Cell, ReportTable


class PythonWriters(BasicInput):
    r"""Serialize report tables as CSV or JSON and write them to a file or standard output.

    CSV uses ``,`` and ``\n``; rationals and floats are rounded half-up to ``decimals`` places,
    and a missing value is an empty cell. A table with a legend is preceded by one
    ``# legend: F=FB;L=Lunch`` comment line. JSON is an array of flat objects keyed in column
    order, with full-precision numbers and ``null`` for missing values.

    Args:
        options (dict[str, Any]): Options.
    """

    def __init__(self, options: dict[str, Any]) -> None:
        super().__init__(options)

    def round_half_up(self, value: Fraction | float) -> str:
        if isinstance(value, Fraction):
            exact = Decimal(value.numerator) / Decimal(value.denominator)
        else:
            exact = Decimal(repr(value))
        quantum = Decimal(1).scaleb(-self.decimals)
        return str(exact.quantize(quantum, rounding=ROUND_HALF_UP))

    def format_cell(self, value: Cell) -> str:
        if value is None:
            return ""
        if isinstance(value, Fraction | float):
            return self.round_half_up(value)
        return str(value)

    def generate_csv(self, table: ReportTable) -> list[str]:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([self.format_cell(value) for value in row])

        lines = buffer.getvalue().splitlines(keepends=True)
        if table.legend:
            lines.insert(0, "# legend: " + ";".join(f"{code}={name}" for code, name in table.legend) + "\n")
        return lines

    @staticmethod
    def _json_value(value: Cell) -> str | int | float | None:
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else float(value)
        return value

    def generate_json(self, table: ReportTable) -> list[str]:
        data = [
            {column: self._json_value(value) for column, value in zip(table.columns, row, strict=True)}
            for row in table.rows
        ]
        return [json.dumps(data, indent=2, ensure_ascii=False) + "\n"]

    def generate_str(self, table: ReportTable) -> list[str]:
        if self.output_format == "json":
            return self.generate_json(table)
        return self.generate_csv(table)

    def write_to_file(self, data_list: list[str], file_name: str | None = None) -> None:
        """Write lines to ``file_name``, or to standard output without one."""
        if file_name:
            write_list(data_list, file_name, "w", None, False)
        else:
            sys.stdout.write("".join(data_list))
            sys.stdout.flush()
