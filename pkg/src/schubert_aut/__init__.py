"""Exact root systems, Weyl groups and Schubert-variety automorphism checks."""
from __future__ import annotations

from .classify import PreconditionError, classify, is_cominuscule, is_minuscule, minuscule_set
from .constructions import build_dn, build_e, list_suites, verify_lemma_suite
from .demazure import Character, adjoint_character, demazure_apply, demazure_step, h0_module_character
from .extremal import dual_coxeter, minimal_negator, minimal_transporter
from .rootsys import CartanType, RootSystem, Weight, build, parse_type
from .schubert import minuscule_obstruction, search_witnesses, stabilizer_simples, verify_witness
from .weyl import EnumerationTooLarge, WeylElement, from_word, length, longest_element, reduced_word

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "Character",
    "EnumerationTooLarge",
    "PreconditionError",
    "RootSystem",
    "Weight",
    "WeylElement",
    "adjoint_character",
    "build",
    "build_dn",
    "build_e",
    "classify",
    "demazure_apply",
    "demazure_step",
    "dual_coxeter",
    "from_word",
    "h0_module_character",
    "is_cominuscule",
    "is_minuscule",
    "length",
    "list_suites",
    "longest_element",
    "minimal_negator",
    "minimal_transporter",
    "minuscule_obstruction",
    "minuscule_set",
    "parse_type",
    "reduced_word",
    "search_witnesses",
    "stabilizer_simples",
    "verify_lemma_suite",
    "verify_witness",
]
