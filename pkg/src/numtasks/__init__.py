"""Computational checks for repunit divisors, exponential Diophantine
equations, the Loeschian form and pseudo-Fibonacci recurrences."""

__version__ = "0.1.0"
