"""Degrees of maps between highly connected Poincare complexes.

poincaredeg decides, for two torsion-free (n-2)-connected (2n-1)-dimensional
Poincare complexes given by the invariants of their attaching maps, whether a
map of a given degree exists. On top of that it computes degree sets,
decides homotopy equivalence and enumerates homotopy types for n = 4, 5, 6, 7.

  Examples:
    >>> import poincaredeg
    >>> t = poincaredeg.builtin_table(7)
    >>> W1, Z1 = poincaredeg.product_sum(t, 1), poincaredeg.z_complex(1)
    >>> str(poincaredeg.check_degree(W1, Z1, 2))
    'Witness'
"""

__author__ = """Poincaredeg Developers"""
__email__ = 'poincaredeg@users.noreply.github.com'
__version__ = '0.1.0'

# MODULES
from poincaredeg.abelian import AbGroup, GroupElement, GroupHom, reduce, add, scale, element_order, apply_hom, validate_hom
from poincaredeg.lattice import IntMatrix, AffineLattice, hnf, solve_linear, coset_congruence_feasible
from poincaredeg.homotopy_tables import GroupTable, builtin_table, load_table, serialize_table, required_moduli
from poincaredeg.complex import (ComplexSpec, product_sum, homotopy_connected_sum, z_complex, rank_one_complex,
                                 enumerate_complexes, parse_complex, serialize_complex)
from poincaredeg.witness import WitnessMatrix, compose_witness, det_star, homotopy_inverse, identity_witness, is_identity
from poincaredeg.system import ConstraintSystem, build_system, verify_witness
from poincaredeg.solver import (Witness, NoSolutionProven, NoSolutionWithinBounds, Certificate, CertificateKind,
                                UndecidedError, check_degree, iter_witnesses)
from poincaredeg.reports import APUnion, DegreeReport, degree_set, infer_progressions
from poincaredeg.classify import EquivalenceClass, is_equivalent, classify
from poincaredeg.config import SolverParams, solver_config
