"""
hfs-entangle: thermal entanglement and coherence of the hydrogen hyperfine
states in a magnetic field, with a two-spin Heisenberg chain for comparison.
"""

__version__ = "1.0.0"

__all__ = ["__version__"]
