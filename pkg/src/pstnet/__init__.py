"""Association-scheme toolkit for perfect state transfer coupling design."""

__version__ = "0.1.0"
