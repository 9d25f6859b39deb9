"""Initialization."""

__all__ = ["BasicInput", "PythonRunMLNet", "PythonWriters", "ReportTable"]

from .basic_input import BasicInput
from .python_run_mlnet import PythonRunMLNet
from .python_writers import PythonWriters
from .report_table import ReportTable
