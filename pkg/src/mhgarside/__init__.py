"""Garside structures on fundamental groupoids of metric-hemisphere complexes."""

from .arrangement import FaceLattice, covectors_from_hyperplanes, dual_complex, completed_complex
from .cells import CellComplex, build_complex, parse_complex, format_complex
from .fixtures import load_fixture, load_input
from .garside import GarsideContext, make_context
from .hemisphere import HemisphereMaps, check_lmh, check_mh, check_qmh, find_involution
from .oracle import PathOracle
from .salvetti import build_salvetti

__version__ = "0.1.0"

__all__ = [
    "CellComplex", "FaceLattice", "GarsideContext", "HemisphereMaps", "PathOracle",
    "build_complex", "build_salvetti", "check_lmh", "check_mh", "check_qmh", "completed_complex",
    "covectors_from_hyperplanes", "dual_complex", "find_involution", "format_complex",
    "load_fixture", "load_input", "make_context", "parse_complex",
]
