# Two-spin models
from . import heisenberg, hydrogen

__all__ = ["heisenberg", "hydrogen"]
