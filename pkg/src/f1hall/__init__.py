"""Hall algebras and Hall modules of quiver representations over F1 with duality."""

__version__ = "0.1.0"
