"""Services package."""

from . import avc, quadsolve, sphercore, verifier
from .verifier import verify_census, verify_combinatorial, verify_geometric, verify_holonomy

__all__ = [
    "avc",
    "quadsolve",
    "sphercore",
    "verifier",
    "verify_census",
    "verify_combinatorial",
    "verify_geometric",
    "verify_holonomy",
]
