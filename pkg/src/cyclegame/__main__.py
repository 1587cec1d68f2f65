"""Module execution entry point: ``python3 -m cyclegame``."""

from .cli import main

main()
