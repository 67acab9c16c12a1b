"""The equation system deciding whether a map of degree d exists.

For complexes X (rank k) and Y (rank m) over one table, a map of degree d
exists if and only if there are integers a_is, arranged in the blocks A, C, D
of a ``WitnessMatrix``, solving

1. for t <= m, in g1:
   ``sum_i A_it p_i + sum_i C_it eta(p_{k+i}) + (sum_i C(A_it, 2) h(p_i)
   + sum_{i<j} m_ij A_it A_jt + sum_i A_it C_it) [Id, Id]eta = d q_t``;
2. for t <= m, in g2: ``sum_i D_it p_{k+i} = d q_{m+t}``;
3. for s < t <= m, mod 2: ``sum_i A_is A_it h(p_i)
   + sum_{i<j} (A_is A_jt + A_it A_js) m_ij + sum_i (A_is C_it + A_it C_is)
   = d m^Y_st``;
4. ``A^T D = d I_m``.

Here p are the invariants of X, q those of Y, h the Hopf-Hilton coefficient
map and C(a, 2) = a(a-1)/2.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from poincaredeg.abelian import GroupElement, scale
from poincaredeg.complex import ComplexSpec
from poincaredeg.witness import WitnessMatrix

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


def binomial2(a: int) -> int:
  """C(a, 2) = a(a-1)/2 for every integer, negative ones included.

  Examples:
      >>> binomial2(-2)
      3
  """
  return a * (a - 1) // 2


@dataclass(frozen=True)
class GroupEquation:
  """``lhs_t = target`` in g1 (equation 1) or g2 (equation 2), column t."""
  t: int
  target: GroupElement


@dataclass(frozen=True)
class ParityEquation:
  """Equation 3 for the column pair s < t."""
  s: int
  t: int
  target: int


@dataclass(frozen=True)
class BilinearEquation:
  """Entry (s, t) of ``A^T D = d I``."""
  s: int
  t: int
  target: int


@dataclass(frozen=True)
class ConstraintSystem:
  """Equations (1)-(4) for a fixed pair and degree."""
  source: ComplexSpec
  target: ComplexSpec
  d: int
  eq1: Tuple[GroupEquation, ...]
  eq2: Tuple[GroupEquation, ...]
  eq3: Tuple[ParityEquation, ...]
  eq4: Tuple[BilinearEquation, ...]

  @property
  def table(self):
    return self.source.table

  @property
  def k(self) -> int:
    return self.source.rank

  @property
  def m(self) -> int:
    return self.target.rank

  def counts(self) -> Tuple[int, int, int, int]:
    """Scalar constraint counts ``(m, m, m(m-1)/2, m^2)``."""
    return len(self.eq1), len(self.eq2), len(self.eq3), len(self.eq4)


def build_system(X: ComplexSpec, Y: ComplexSpec, d: int) -> ConstraintSystem:
  """Builds the system for maps X -> Y of degree d.

  Raises:
      ValueError: If X and Y use different tables.

  Examples:
      >>> from poincaredeg.complex import product_sum
      >>> from poincaredeg.homotopy_tables import builtin_table
      >>> t = builtin_table(5)
      >>> build_system(product_sum(t, 2), product_sum(t, 2), 3).counts()
      (2, 2, 1, 4)
  """
  if X.table != Y.table:
    message = f"Degree systems need a shared table, got n={X.n} and n={Y.n}"
    logger.error(message)
    raise ValueError(message)
  m = Y.rank
  return ConstraintSystem(
    source=X,
    target=Y,
    d=d,
    eq1=tuple(GroupEquation(t, scale(d, Y.first_low[t])) for t in range(m)),
    eq2=tuple(GroupEquation(t, scale(d, Y.first_high[t])) for t in range(m)),
    eq3=tuple(ParityEquation(s, t, (d * Y.m(s, t)) % 2) for s in range(m) for t in range(s + 1, m)),
    eq4=tuple(BilinearEquation(s, t, d if s == t else 0) for s in range(m) for t in range(m)),
  )


def hopf_values(X: ComplexSpec) -> Tuple[int, ...]:
  """h(p_i alpha) for i = 1..k, as bits."""
  return tuple(X.table.hopf_h(p).coeffs[0] for p in X.first_low)


def eq1_value(X: ComplexSpec, a: Sequence[int], c: Sequence[int], hopf: Sequence[int] = None) -> GroupElement:
  """Left side of equation 1 for one column, given that column of A and C."""
  table = X.table
  hopf = hopf_values(X) if hopf is None else hopf
  k = X.rank
  raw = [0] * table.g1.rank
  for i in range(k):
    for r, x in enumerate(X.first_low[i].coeffs):
      raw[r] += a[i] * x
    if c[i]:
      for r, x in enumerate(table.eta_push(X.first_high[i]).coeffs):
        raw[r] += c[i] * x
  if not table.whitehead_eta.is_zero():
    coefficient = sum(binomial2(a[i]) * hopf[i] + a[i] * c[i] for i in range(k))
    coefficient += sum(X.m(i, j) * a[i] * a[j] for i in range(k) for j in range(i + 1, k))
    for r, x in enumerate(table.whitehead_eta.coeffs):
      raw[r] += coefficient * x
  return table.g1.element(*raw)


def eq2_value(X: ComplexSpec, dcol: Sequence[int]) -> GroupElement:
  """Left side of equation 2 for one column of D."""
  g2 = X.table.g2
  raw = [0] * g2.rank
  for i in range(X.rank):
    for r, x in enumerate(X.first_high[i].coeffs):
      raw[r] += dcol[i] * x
  return g2.element(*raw)


def eq3_value(X: ComplexSpec, A, C, s: int, t: int, hopf: Sequence[int] = None) -> int:
  """Left side of equation 3 for columns s < t, reduced mod 2."""
  hopf = hopf_values(X) if hopf is None else hopf
  k = X.rank
  total = 0
  for i in range(k):
    total += A[i][s] * A[i][t] * hopf[i] + A[i][s] * C[i][t] + A[i][t] * C[i][s]
    for j in range(i + 1, k):
      if X.m(i, j):
        total += A[i][s] * A[j][t] + A[i][t] * A[j][s]
  return total % 2


def column(M, t: int) -> Tuple[int, ...]:
  return tuple(row[t] for row in M)


def violations(S: ConstraintSystem, W: WitnessMatrix):
  """Yields a short description of every equation ``W`` fails."""
  if W.k != S.k or W.m != S.m:
    message = f"Witness blocks are {W.k}x{W.m} but the system needs {S.k}x{S.m}"
    logger.error(message)
    raise ValueError(message)
  X = S.source
  hopf = hopf_values(X)
  for eq in S.eq1:
    value = eq1_value(X, column(W.A, eq.t), column(W.C, eq.t), hopf)
    if value != eq.target:
      yield f"eq1[{eq.t}]: {value} != {eq.target}"
  for eq in S.eq2:
    value = eq2_value(X, column(W.D, eq.t))
    if value != eq.target:
      yield f"eq2[{eq.t}]: {value} != {eq.target}"
  for eq in S.eq3:
    value = eq3_value(X, W.A, W.C, eq.s, eq.t, hopf)
    if value != eq.target:
      yield f"eq3[{eq.s},{eq.t}]: {value} != {eq.target}"
  for eq in S.eq4:
    value = sum(W.A[i][eq.s] * W.D[i][eq.t] for i in range(S.k))
    if value != eq.target:
      yield f"eq4[{eq.s},{eq.t}]: {value} != {eq.target}"


def verify_witness(S: ConstraintSystem, W: WitnessMatrix) -> bool:
  """True iff ``W`` satisfies every equation of ``S`` exactly.

  Raises:
      ValueError: If the block shapes do not match the system.
  """
  for _ in violations(S, W):
    return False
  return True
