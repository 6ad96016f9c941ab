from .basis import choose_basis_V, rank_mod_p
from .fractal import fractality_witness
from .letters import BLetter, GenLetter, Rooted, label_set, letter_section
from .orbits import OrbitResult, cycle, orbit
from .sections import (
    ActiveLetters,
    act,
    active_letters,
    conjugated_form,
    first_layer_vector,
    section,
    section_at_letter,
)
from .triviality import (
    Proven,
    RefutedAt,
    SectionWalk,
    TrivialityVerdict,
    TrivialToDepth,
    Unknown,
    equal_to_depth,
    is_trivial_to_depth,
    prove_trivial,
    walk_sections,
)
from .vertex import Vertex, format_vertex, iter_layer, layer_size, parse_vertex, random_vertex
from .word import Word, commutator, format_word, normalize, parse_word, product

__all__ = [
    "ActiveLetters",
    "BLetter",
    "GenLetter",
    "OrbitResult",
    "Proven",
    "RefutedAt",
    "Rooted",
    "SectionWalk",
    "TrivialToDepth",
    "TrivialityVerdict",
    "Unknown",
    "Vertex",
    "Word",
    "act",
    "active_letters",
    "choose_basis_V",
    "commutator",
    "conjugated_form",
    "cycle",
    "equal_to_depth",
    "first_layer_vector",
    "format_vertex",
    "format_word",
    "fractality_witness",
    "is_trivial_to_depth",
    "iter_layer",
    "label_set",
    "layer_size",
    "letter_section",
    "normalize",
    "orbit",
    "parse_vertex",
    "parse_word",
    "product",
    "prove_trivial",
    "random_vertex",
    "rank_mod_p",
    "section",
    "section_at_letter",
    "walk_sections",
]
