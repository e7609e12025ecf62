"""Positive Artin monoids, coset complexes C^n(k) and exhaustive checks of their stability lemmas."""

from .complex import (FiltrationComplex, SimplexRef, all_faces, build_filtration, chamber,
                      check_simplicial_identities, face)
from .diagram import (EMPTY_SEED, INFINITY, ArtinSequence, CoxeterDiagram, SequenceConfig,
                      abelianization_rank, classify_finite_type, level_diagram, parse_diagram,
                      parse_seed)
from .divisibility import (Lcm, Reduction, coset_equal, coset_set, end_gen, end_mon, lcm_of_end_mon,
                           lcm_pair, reduce, right_divides, right_quotient, verify_decomposition)
from .errors import (ArtinstabError, BadLabel, BoundarySquareNonzero, ClassSizeExceeded,
                     CounterexampleFound, DiagramError, DuplicateEdge, MaximumNotUnique,
                     ScaleExceeded, UnknownGenerator)
from .homology import (HomologyReport, IntegerChainComplex, chain_complex, connectivity_check,
                       reduced_homology, smith_normal_form)
from .lemmas import verify_divisor_identities
from .shelling import shelling_report, verify_point_A, verify_point_B
from .word import (IDENTITY, ArtinMonoid, MonoidElement, alternating_product, canonicalize,
                   equivalence_class, letter_set, letterwise_commutes, multiply)

__version__ = "0.1.0"
