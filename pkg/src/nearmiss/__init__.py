"""Integer solutions of x^4 + y^4 - w^2 = n from conic-bundle fibrations."""

from .conic import AffineConic, BinaryForm, BoundaryType, TernaryForm
from .engine import GenConfig, LedgerEntry, Provenance, generate, run_generation
from .errors import DomainError, NoGoodSeed, NotPellType, UnsupportedN
from .surface import CaseKind, Fiber, Kind, Solution, classify, goodness, verify_solution

__version__ = "0.1.0"
