"""Integer codes, compressed posting lists and query evaluation over them."""

__version__ = "0.1.0"
