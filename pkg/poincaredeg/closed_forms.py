"""Closed-form degree sets for families where they are known.

Used to cross-check ``degree_set`` output (``poincaredeg degrees --compare``).
Each function describes a set of degrees as a predicate or a modulus.
"""

import math
from typing import Callable, Optional

from poincaredeg.abelian import INFINITE, element_order, scale
from poincaredeg.complex import ComplexSpec, product_sum

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)

ZERO = "zero"
ALL = "all"
EVEN = "even"


def case_1a_modulus(a: int, b: int) -> int:
  """n = 4, X = (a w, b eta^2) mapping to S^3 x S^4: D is this modulus times Z.

  Examples:
      >>> case_1a_modulus(2, 1)
      6
      >>> case_1a_modulus(2, 0)
      6
      >>> case_1a_modulus(0, 1)
      2
  """
  if b % 2:
    return 12 // math.gcd(a, 6)
  return 12 // math.gcd(a, 12)


def case_1b_members(d: int) -> bool:
  """n = 4, X = Y = (w, eta^2): d is a degree iff d is not 2 mod 4."""
  return d % 4 != 2


def product_sum_degrees(k: int, m: int) -> str:
  """Degrees between connected sums of k and m copies of S^{n-1} x S^n."""
  return ZERO if k < m else ALL


def lcm_modulus(Y: ComplexSpec) -> int:
  """n = 5, X a connected sum of products, Y of rank 1: D is this modulus times Z.

  The order of q_1 is halved when a multiple of q_1 equals [Id, Id]eta, which
  the source can produce for free.
  """
  table = Y.table
  q1, q2 = Y.first_low[0], Y.first_high[0]
  o1, o2 = element_order(q1), element_order(q2)
  if INFINITE in (o1, o2):
    message = "lcm_modulus needs finite element orders"
    logger.error(message)
    raise ValueError(message)
  w = table.whitehead_eta
  if not w.is_zero() and any(scale(t, q1) == w for t in range(1, o1)):
    o1 //= 2
  return math.lcm(o1, o2)


def n7_type(X: ComplexSpec) -> str:
  """Returns "W" when every p_i alpha vanishes, "Z" otherwise."""
  return "W" if all(p.is_zero() for p in X.first_low) else "Z"


def w_z_degrees(source_type: str, target_type: str) -> str:
  """Degrees between n = 7 complexes of equal rank, by type."""
  return ALL if source_type == target_type else EVEN


def _multiples(modulus: int) -> Callable[[int], bool]:
  return lambda d: d % modulus == 0


def known_degree_set(X: ComplexSpec, Y: ComplexSpec) -> Optional[Callable[[int], bool]]:
  """A membership predicate when the pair belongs to a recognized family, else None."""
  if X.table != Y.table:
    return None
  n = X.n
  if X == product_sum(X.table, X.rank) and Y == product_sum(Y.table, Y.rank):
    if product_sum_degrees(X.rank, Y.rank) == ZERO:
      return lambda d: d == 0
    return lambda d: True
  if n == 7 and X.rank == Y.rank and all(p.is_zero() for p in X.first_low[1:] + Y.first_low[1:]) \
      and not any(b for row in X.second + Y.second for b in row):
    if w_z_degrees(n7_type(X), n7_type(Y)) == ALL:
      return lambda d: True
    return _multiples(2)
  if n == 4 and X.rank == 1 and Y.rank == 1:
    a, b = X.first_low[0].coeffs[0], X.first_high[0].coeffs[0]
    if Y == product_sum(Y.table, 1):
      return _multiples(case_1a_modulus(a, b))
    if X == Y and (a, b) == (1, 1):
      return case_1b_members
  if n == 5 and Y.rank == 1 and X == product_sum(X.table, X.rank):
    return _multiples(lcm_modulus(Y))
  return None
