"""Exact verification tools for braid words, quasipositive surfaces, presentations and
negative-definite intersection lattices."""

from .braid import (BraidWord, StrandPermutation, closure_components, closure_permutation,
                    concatenate, exponent_sum, free_reduce, invert, parse_word)
from .garside import CanonicalForm, canonical_form, is_trivial, words_equal
from .lattice import (IntersectionForm, classes_of_square, direct_sum, evaluate,
                      sphere_obstruction_report)
from .presentation import (GroupPresentation, GroupWord, abelianization,
                           is_infinite_cyclic_certificate, tietze_simplify, weinbaum_subword_test)
from .qp import (QPBand, QuasipositiveFactorization, boundary_sum, builtin_factorizations, expand,
                 prepend_band, surface_type)
from .stein import LegendrianCounts, SteinHandleDiagram, rotation, tb, to_lattice, validate_stein

__version__ = "0.1.0"
