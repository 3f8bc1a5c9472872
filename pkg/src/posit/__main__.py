"""Entry point for `python -m posit`."""

from .cli import entry

entry()
