"""Majority list and correspondence colourings of finite, acyclic and countable graphs."""

__version__ = "0.1.0"
