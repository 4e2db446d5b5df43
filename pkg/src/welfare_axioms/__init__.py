"""Bentham and Rawls solution concepts, their axioms, and executable checks of both."""

__version__ = "0.1.0"
