"""Exact computations in the Jennings group of formal power series."""
