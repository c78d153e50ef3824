"""Exact Lie-theory engine for invariant contact structures on ADE flag varieties."""

from flagcontact.rootsys import CartanKind, Root, RootSystem, Weight, build_root_system
from flagcontact.parabolic import ParabolicData, build_parabolic
from flagcontact.classifier import ContactReport, classify
from flagcontact.chevalley import ChevalleyAlgebra, build_chevalley

__version__ = "0.1.0"

__all__ = [
    "CartanKind",
    "ChevalleyAlgebra",
    "ContactReport",
    "ParabolicData",
    "Root",
    "RootSystem",
    "Weight",
    "build_chevalley",
    "build_parabolic",
    "build_root_system",
    "classify",
]
