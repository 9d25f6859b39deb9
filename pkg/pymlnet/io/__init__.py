"""Initialization."""

__all__ = ["load", "load_fixture", "save", "export_edge_list", "export_actor_list", "FIXTURES_DIR"]

from .edge_list import FIXTURES_DIR, export_actor_list, export_edge_list, load, load_fixture, save
