"""
Word lengths, balls, and the section checks behind contraction and separation.
"""

from .ball import ball, enumerate_ball, generators, random_letter, random_word, sample_ball
from .branch import gamma3_section_check
from .contraction import contraction_check, depth_estimate, regular_contraction_check, s_to_e_check
from .length import GenSetTag, word_length
from .order import order_check
from .orbit_checks import fractality_check, max_orbit_check, transitivity_check
from .report import ContractionReport, VerificationReport
from .separation import separation_check, vanishing_commutator_check

__all__ = [
    "ContractionReport",
    "GenSetTag",
    "VerificationReport",
    "ball",
    "contraction_check",
    "depth_estimate",
    "enumerate_ball",
    "fractality_check",
    "gamma3_section_check",
    "generators",
    "max_orbit_check",
    "order_check",
    "random_letter",
    "random_word",
    "regular_contraction_check",
    "s_to_e_check",
    "sample_ball",
    "separation_check",
    "transitivity_check",
    "vanishing_commutator_check",
    "word_length",
]
