"""List, unique and AMD-assisted decoding of twisted GRS and Roth-Lempel codes."""

__version__ = "0.1.0"
