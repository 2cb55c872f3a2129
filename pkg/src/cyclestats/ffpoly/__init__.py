"""Prime-field polynomial arithmetic, factorization and arithmetic functions."""

from .poly import (PrimeField, Poly, format_poly, index_of, iter_monic, monic_from_index,
                   parse_poly)
from .factor import (DEFAULT_SEED, Factorization, cycle_type, factor, factor_trial_division,
                     is_irreducible, is_squarefree)
from .arith import (big_omega, d_k, dk_from_pattern, omega, phi, phi_by_enumeration,
                    phi_from_pattern, sigma, sigma_by_enumeration, sigma_from_pattern)
from .structure import (DistinctnessCertificate, DistinctnessError, StructurePoly,
                        distinctness_certificate, multiplicities_from_structure, phi_structure,
                        root_modulus_lower_bound, sigma_structure)
from .table import BudgetExceeded, FactorTable, factor_table, shifted_indices
