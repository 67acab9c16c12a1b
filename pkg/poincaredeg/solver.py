"""Deciding whether a map of degree d exists between two complexes.

``check_degree`` returns one of three verdicts:

* ``Witness``: a verified solution of the degree equations;
* ``NoSolutionProven``: a certificate that no integral solution exists;
* ``NoSolutionWithinBounds``: the bounded search found nothing, which proves
  nothing.

The decision runs a zero-degree shortcut and the rank precheck, then modular
certificates, then the exact rank-1 factorization path, and finally a bounded
search over the A block.
"""

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from poincaredeg.complex import ComplexSpec
from poincaredeg.config import SolverParams
from poincaredeg.homotopy_tables import GroupTable, required_moduli
from poincaredeg.lattice import IntMatrix, coset_congruence_feasible, solve_linear, solve_vector
from poincaredeg.system import build_system, column, eq1_value, eq3_value, hopf_values, verify_witness
from poincaredeg.utils import lcm_all, shell, signed_divisors
from poincaredeg.witness import WitnessMatrix

try:
  from enum import StrEnum
except ImportError:
  # Python < 3.11 compatibility
  from enum import Enum
  class StrEnum(str, Enum):
    pass

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


class CertificateKind(StrEnum):
  """Why a degree is impossible.

  Attributes:
      MODULUS: no assignment survives reduction modulo a fixed modulus.
      RANK: a map from a lower-rank complex has degree 0.
      FACTORIZATION: the rank-1 divisor enumeration is exhausted.
  """
  MODULUS = "modulus"
  RANK = "rank"
  FACTORIZATION = "factorization"


class VerdictKind(StrEnum):
  WITNESS = "witness"
  PROVEN = "no_solution_proven"
  WITHIN_BOUNDS = "no_solution_within_bounds"


class UndecidedError(RuntimeError):
  """A bounded search left a question open that needed a definite answer."""

  def __init__(self, message: str, source: ComplexSpec = None, target: ComplexSpec = None):
    super().__init__(message)
    self.source = source
    self.target = target


@dataclass(frozen=True)
class Certificate:
  kind: CertificateKind
  modulus: Optional[int] = None
  detail: str = ""

  def __str__(self):
    if self.kind == CertificateKind.MODULUS:
      return f"mod {self.modulus}"
    return str(self.kind.value)


@dataclass(frozen=True)
class Witness:
  witness: WitnessMatrix
  kind: VerdictKind = field(default=VerdictKind.WITNESS, init=False)

  def __str__(self):
    return "Witness"


@dataclass(frozen=True)
class NoSolutionProven:
  certificate: Certificate
  kind: VerdictKind = field(default=VerdictKind.PROVEN, init=False)

  def __str__(self):
    return f"NoSolutionProven ({self.certificate})"


@dataclass(frozen=True)
class NoSolutionWithinBounds:
  box: int
  moduli: Tuple[int, ...]
  max_residue_classes: int
  kind: VerdictKind = field(default=VerdictKind.WITHIN_BOUNDS, init=False)

  def __str__(self):
    return f"NoSolutionWithinBounds (box {self.box})"


def _fail(message: str):
  logger.error(message)
  raise ValueError(message)


def default_moduli(table: GroupTable) -> Tuple[int, ...]:
  """``(2, 4, M_A, lcm(M_A, M_C, M_D, 4))`` without repeats.

  Examples:
      >>> from poincaredeg.homotopy_tables import builtin_table
      >>> default_moduli(builtin_table(4))
      (2, 4, 12)
  """
  m_a, m_c, m_d = required_moduli(table)
  result = []
  for q in (2, 4, m_a, lcm_all(m_a, m_c, m_d, 4)):
    if q not in result:
      result.append(q)
  return tuple(result)


def _check_pair(X: ComplexSpec, Y: ComplexSpec):
  if X.table != Y.table:
    _fail(f"Degrees are only defined over a shared table, got n={X.n} and n={Y.n}")
  if not (X.table.g1.is_finite() and X.table.g2.is_finite()):
    _fail("The degree solver needs finite homotopy groups")


def _confirmed(X: ComplexSpec, Y: ComplexSpec, d: int, W: WitnessMatrix) -> Witness:
  if not verify_witness(build_system(X, Y, d), W):
    message = f"Internal error: search produced a witness that fails verification: {W}"
    logger.error(message)
    raise RuntimeError(message)
  return Witness(W)


def _blocks(values, k: int, m: int):
  return tuple(tuple(values[i * m + t] for t in range(m)) for i in range(k))


# -- modular certificates ------------------------------------------------------

def _solvable_mod(rows, targets, moduli, nvars: int) -> bool:
  """Does ``rows @ x == targets`` hold modulo the per-row moduli for some integer x?"""
  live = [(r, c, q) for r, c, q in zip(rows, targets, moduli) if q != 1]
  if not live:
    return True
  system = IntMatrix.from_rows(
    [list(r) + [-q if jj == ii else 0 for jj in range(len(live))] for ii, (r, _, q) in enumerate(live)],
    cols=nvars + len(live))
  return solve_vector(system, [c for _, c, _ in live]) is not None


def _subgroup_contains(generators, target, orders) -> bool:
  rows = [[g[r] for g in generators] for r in range(len(orders))]
  return _solvable_mod(rows, list(target), list(orders), len(generators))


def _relaxation_holds(X: ComplexSpec, Y: ComplexSpec, q: int, d: int) -> bool:
  """Equations (1) and (2) ignoring their nonlinear structure, in groups mod q."""
  table = X.table
  g1_orders = table.g1.reduced_modulo(q).orders
  g2_orders = table.g2.reduced_modulo(q).orders
  low_gens = [x.coeffs for x in X.first_low]
  low_gens += [table.eta_push(x).coeffs for x in X.first_high]
  if not table.whitehead_eta.is_zero():
    low_gens.append(table.whitehead_eta.coeffs)
  high_gens = [x.coeffs for x in X.first_high]
  for y in Y.first_low:
    if not _subgroup_contains(low_gens, [d * c for c in y.coeffs], g1_orders):
      return False
  for y in Y.first_high:
    if not _subgroup_contains(high_gens, [d * c for c in y.coeffs], g2_orders):
      return False
  return True


def _d_part_feasible_mod(X: ComplexSpec, Y: ComplexSpec, A, q: int, d: int) -> bool:
  """Equation (4) mod q and equation (2) mod gcd(order, q), solved for D given A."""
  k, m = X.rank, Y.rank
  nvars = k * m
  rows, targets, moduli = [], [], []
  for s in range(m):
    for t in range(m):
      row = [0] * nvars
      for i in range(k):
        row[t * k + i] = A[i][s]
      rows.append(row)
      targets.append(d if s == t else 0)
      moduli.append(q)
  for j, o in enumerate(X.table.g2.orders):
    g = math.gcd(o, q)
    if g == 1:
      continue
    for t in range(m):
      row = [0] * nvars
      for i in range(k):
        row[t * k + i] = X.first_high[i].coeffs[j]
      rows.append(row)
      targets.append(d * Y.first_high[t].coeffs[j])
      moduli.append(g)
  return _solvable_mod(rows, targets, moduli, nvars)


def _c_part_feasible(X: ComplexSpec, Y: ComplexSpec, A, d: int, m_c: int, use_eq1: bool, use_eq3: bool, hopf):
  """First C residue mod m_c satisfying the imposed equations (1) and (3), or None."""
  k, m = X.rank, Y.rank
  if not use_eq1 and not use_eq3:
    return tuple((0,) * m for _ in range(k))
  targets1 = [Y.first_low[t].group.element(*[d * c for c in Y.first_low[t].coeffs]) for t in range(m)]
  for values in itertools.product(range(m_c), repeat=k * m):
    C = _blocks(values, k, m)
    if use_eq1 and any(eq1_value(X, column(A, t), column(C, t), hopf) != targets1[t] for t in range(m)):
      continue
    if use_eq3 and any(eq3_value(X, A, C, s, t, hopf) != (d * Y.m(s, t)) % 2
                       for s in range(m) for t in range(s + 1, m)):
      continue
    return C
  return None


@lru_cache(maxsize=65536)
def residue_search(X: ComplexSpec, Y: ComplexSpec, q: int, d_mod: int, max_residue_classes: int) -> Optional[bool]:
  """Searches all assignments modulo q.

  Returns:
      False when no assignment survives (a proof of infeasibility), True when
      one does, None when the residue space is too large to search and the
      linear relaxation did not already refute.
  """
  if not _relaxation_holds(X, Y, q, d_mod):
    logger.info(f"Linear relaxation fails mod {q}")
    return False
  k, m = X.rank, Y.rank
  if q ** (k * m) > max_residue_classes:
    logger.warning(f"Skipping modulus {q}: {q}^{k * m} residue classes exceed {max_residue_classes}")
    return None
  m_a, m_c, _ = required_moduli(X.table)
  use_eq1 = q % m_a == 0 and q % m_c == 0
  use_eq3 = q % 2 == 0 and m >= 2
  hopf = hopf_values(X)
  low, high = -((q - 1) // 2), q // 2
  for radius in range(high + 1):
    for values in shell(k * m, radius, low, high):
      A = _blocks(values, k, m)
      if _c_part_feasible(X, Y, A, d_mod, m_c, use_eq1, use_eq3, hopf) is None:
        continue
      if _d_part_feasible_mod(X, Y, A, q, d_mod):
        return True
  return False


# -- exact and bounded searches -------------------------------------------------

def _rank_one_candidates(X: ComplexSpec, Y: ComplexSpec, d: int) -> Iterator[WitnessMatrix]:
  _, m_c, _ = required_moduli(X.table)
  S = build_system(X, Y, d)
  for a11 in signed_divisors(d):
    a22 = d // a11
    for c in range(m_c):
      W = WitnessMatrix([[a11]], [[c]], [[a22]])
      if verify_witness(S, W):
        yield W


def _d_block(X: ComplexSpec, Y: ComplexSpec, A, d: int):
  """An integral D with ``A^T D = d I`` solving equation (2), or None."""
  k, m = X.rank, Y.rank
  lattice = solve_linear(IntMatrix.from_rows(A).transpose(),
                         IntMatrix.from_rows([[d if s == t else 0 for t in range(m)] for s in range(m)]))
  if lattice is None:
    return None
  m_d = required_moduli(X.table)[2]
  rows, targets = [], []
  for j, o in enumerate(X.table.g2.orders):
    if o <= 1:
      continue
    scale = m_d // o
    for t in range(m):
      row = [0] * (k * m)
      for i in range(k):
        row[t * k + i] = X.first_high[i].coeffs[j] * scale
      rows.append(row)
      targets.append(d * Y.first_high[t].coeffs[j] * scale)
  point = coset_congruence_feasible(lattice, IntMatrix.from_rows(rows, cols=k * m), targets, m_d)
  if point is None:
    return None
  return tuple(tuple(point[t * k + i] for t in range(m)) for i in range(k))


def _box_candidates(X: ComplexSpec, Y: ComplexSpec, d: int, box: int) -> Iterator[WitnessMatrix]:
  k, m = X.rank, Y.rank
  _, m_c, _ = required_moduli(X.table)
  hopf = hopf_values(X)
  targets1 = [Y.first_low[t].group.element(*[d * c for c in Y.first_low[t].coeffs]) for t in range(m)]
  pairs = [(s, t, (d * Y.m(s, t)) % 2) for s in range(m) for t in range(s + 1, m)]
  for radius in range(box + 1):
    for values in shell(k * m, radius):
      A = _blocks(values, k, m)
      D = None
      for cvalues in itertools.product(range(m_c), repeat=k * m):
        C = _blocks(cvalues, k, m)
        if any(eq1_value(X, column(A, t), column(C, t), hopf) != targets1[t] for t in range(m)):
          continue
        if any(eq3_value(X, A, C, s, t, hopf) != target for s, t, target in pairs):
          continue
        if D is None:
          D = _d_block(X, Y, A, d)
          if D is None:
            break
        yield WitnessMatrix(A, C, D)


def _box_for(X: ComplexSpec, d: int, params: SolverParams) -> int:
  if params.box is not None:
    return params.box
  return max(abs(d), required_moduli(X.table)[0])


def check_degree(X: ComplexSpec, Y: ComplexSpec, d: int, params: SolverParams = None):
  """Decides whether a map X -> Y of degree d exists.

  Args:
      X: Source complex.
      Y: Target complex.
      d: The degree.
      params: Search parameters; defaults to ``SolverParams()``.

  Returns:
      Witness, NoSolutionProven or NoSolutionWithinBounds.

  Raises:
      ValueError: If the complexes use different tables or the table has
          infinite groups.

  Examples:
      >>> from poincaredeg.complex import product_sum, z_complex
      >>> from poincaredeg.homotopy_tables import builtin_table
      >>> str(check_degree(product_sum(builtin_table(7), 1), z_complex(1), 1))
      'NoSolutionProven (mod 2)'
  """
  params = params or SolverParams()
  _check_pair(X, Y)
  k, m = X.rank, Y.rank

  if d == 0:
    return _confirmed(X, Y, d, WitnessMatrix.zero(k, m))
  if k < m:
    logger.info(f"Rank {k} < {m}: only degree 0 is possible")
    return NoSolutionProven(Certificate(CertificateKind.RANK, detail=f"rank {k} < {m}"))

  moduli = params.moduli or default_moduli(X.table)
  for q in moduli:
    if residue_search(X, Y, q, d % q, params.max_residue_classes) is False:
      logger.info(f"Degree {d} refuted modulo {q}")
      return NoSolutionProven(Certificate(CertificateKind.MODULUS, modulus=q))

  if k == 1 and m == 1:
    for W in _rank_one_candidates(X, Y, d):
      logger.info(f"Degree {d} realized by the factorization {W.A[0][0]} * {W.D[0][0]}")
      return _confirmed(X, Y, d, W)
    return NoSolutionProven(Certificate(CertificateKind.FACTORIZATION, detail=f"all factorizations of {d}"))

  box = _box_for(X, d, params)
  for W in _box_candidates(X, Y, d, box):
    logger.info(f"Degree {d} realized within box {box}")
    return _confirmed(X, Y, d, W)
  logger.warning(f"No witness for degree {d} within box {box}; undecided")
  return NoSolutionWithinBounds(box, tuple(moduli), params.max_residue_classes)


def iter_witnesses(X: ComplexSpec, Y: ComplexSpec, d: int, params: SolverParams = None) -> Iterator[WitnessMatrix]:
  """Streams verified witnesses for degree d.

  Rank 1 pairs with ``d != 0`` use the complete factorization enumeration;
  everything else uses the bounded search, yielding one D per admissible
  pair of A and C.
  """
  params = params or SolverParams()
  _check_pair(X, Y)
  if X.rank == 1 and Y.rank == 1 and d != 0:
    candidates = _rank_one_candidates(X, Y, d)
  else:
    candidates = _box_candidates(X, Y, d, _box_for(X, d, params))
  for W in candidates:
    yield _confirmed(X, Y, d, W).witness
