"""Weakly separated collections, positroids, plabic graphs and plabic tilings."""

__version__ = "0.1.0"
