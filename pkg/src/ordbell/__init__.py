"""Exact ordered Bell / degenerate ordered Bell machinery and basis expansions."""
