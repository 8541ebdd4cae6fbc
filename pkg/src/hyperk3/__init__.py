"""hyperk3: exact hypergeometric lattices and K3 automorphism synthesis."""

__version__ = "0.1.0"
