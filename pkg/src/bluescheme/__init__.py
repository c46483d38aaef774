"""Proj of graded blueprints over F1, with the Gr(2,4) model built in."""
from .config import Settings
from .congruence import Verdict, additive_closure, find_derivation, relation_holds
from .dsl import parse_presentation, to_dsl
from .errors import (BlueprintError, DSLParseError, EnumerationLimitError, GradingError, PresentationError,
                     UnknownGeneratorError, UnsupportedDegreeError)
from .localization import Fraction, LocalizedPresentation, degree_zero_part, localize
from .models import (GR24_COUNTING, CountingPolynomial, affine_space, chart_matches_model,
                     count_subspaces_bruteforce, eval_counting_polynomial, get_builtin, grassmannian_2_4,
                     grassmannian_2_4_presentation, matrices_2x2, projective_space)
from .monomial import FormalSum, Monomial, Relation, monomial_mul
from .presentation import BlueprintPresentation, degree_of, make_free_blueprint, quotient, validate_grading
from .proj import (ProjSpace, basic_open, build_proj, chart, is_homogeneous_ideal, irrelevant_ideal,
                   proj_points, stalk, structural_fiber)
from .spectra import (MonomialIdeal, PrimeIdeal, SpectrumPoset, closed_points, enumerate_primes,
                      generic_points, ideal_from_generators, is_prime, rank, specialization_order, spectrum)

__version__ = "0.1.0"
