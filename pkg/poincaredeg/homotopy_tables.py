"""Homotopy group data that parameterizes the degree criterion for a fixed n.

For each n the criterion needs the groups ``G1 = pi_{2n-2}(S^{n-1})`` and
``G2 = pi_{2n-2}(S^n)``, the eta-postcomposition homomorphism ``G2 -> G1``, the
element ``[Id, Id] eta`` of ``G1`` and the Hopf-Hilton coefficient map
``h: G1 -> Z/2``. Tables for n = 4, 5, 6, 7 are built in; other tables are
loaded from documents.
"""

import math
from dataclasses import dataclass
from typing import Tuple

from poincaredeg.abelian import AbGroup, GroupElement, GroupHom, reduce, validate_hom

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)

Z2 = AbGroup((2,), ("eta",))

SUPPORTED_N = (4, 5, 6, 7)

TABLE_FIELDS = ["n", "g1_orders", "g2_orders", "eta_push", "whitehead_eta", "hopf_h"]


@dataclass(frozen=True)
class GroupTable:
  """Per-n homotopy data.

  Attributes:
      n: The dimension parameter (complexes have dimension 2n-1).
      g1: pi_{2n-2}(S^{n-1}), home of the invariants p_i alpha for i <= k.
      g2: pi_{2n-2}(S^n), home of the invariants p_{k+i} alpha.
      eta_push: class of eta composed with x, as a map g2 -> g1.
      whitehead_eta: the element [Id_{S^{n-1}}, Id_{S^{n-1}}] eta of g1.
      hopf_h: the Hopf-Hilton coefficient h with H(x) = h(x) eta, a map g1 -> Z/2.
  """
  n: int
  g1: AbGroup
  g2: AbGroup
  eta_push: GroupHom
  whitehead_eta: GroupElement
  hopf_h: GroupHom


def _fail(message: str):
  logger.error(message)
  raise ValueError(message)


def validate_table(t: GroupTable) -> GroupTable:
  """Checks every GroupTable invariant.

  Returns:
      GroupTable: ``t`` itself, so the call can be chained.

  Raises:
      ValueError: Naming the first violated invariant.
  """
  if t.n < 4:
    _fail(f"n must be at least 4, got {t.n}")
  if t.eta_push.domain.orders != t.g2.orders or t.eta_push.codomain.orders != t.g1.orders:
    _fail("eta_push must map g2 to g1")
  if t.hopf_h.domain.orders != t.g1.orders or t.hopf_h.codomain.orders != Z2.orders:
    _fail("hopf_h must map g1 to Z/2")
  for name, hom in (("eta_push", t.eta_push), ("hopf_h", t.hopf_h)):
    violation = validate_hom(hom)
    if violation:
      _fail(f"{name} is not well defined: {violation}")
  if t.whitehead_eta.group.orders != t.g1.orders:
    _fail("whitehead_eta must be an element of g1")
  if not (2 * t.whitehead_eta).is_zero():
    _fail("whitehead_eta must be 2-torsion")
  if not t.whitehead_eta.is_zero():
    if t.n % 4 == 0:
      _fail("whitehead_eta: 4 | n forces zero")
    if t.n == 7:
      _fail("whitehead_eta: n = 7 forces zero")
  return t


def make_table(n, g1_orders, g2_orders, eta_push, whitehead_eta, hopf_h, g1_names=(), g2_names=()) -> GroupTable:
  """Builds and validates a table from raw integer data.

  Args:
      n: Dimension parameter.
      g1_orders: Factor orders of g1.
      g2_orders: Factor orders of g2.
      eta_push: Matrix of eta_push, rows indexed by g1 factors.
      whitehead_eta: Coefficients of [Id, Id] eta in g1.
      hopf_h: Matrix of h, a single row indexed by g1 factors.

  Returns:
      GroupTable: The validated table.
  """
  g1 = AbGroup(tuple(g1_orders), tuple(g1_names))
  g2 = AbGroup(tuple(g2_orders), tuple(g2_names))
  table = GroupTable(
    n=int(n),
    g1=g1,
    g2=g2,
    eta_push=GroupHom(g2, g1, tuple(tuple(r) for r in eta_push)),
    whitehead_eta=reduce(g1, whitehead_eta),
    hopf_h=GroupHom(g1, Z2, tuple(tuple(r) for r in hopf_h)),
  )
  return validate_table(table)


def builtin_table(n: int) -> GroupTable:
  """The table for n in {4, 5, 6, 7}.

  The n = 4 value h(w) = 1 and the n = 6 value h = 0 are configuration
  defaults rather than derived data; override them with ``load_table``.

  Raises:
      ValueError: If n is not one of the built-in values.

  Examples:
      >>> builtin_table(4).g1.orders
      (12,)
      >>> builtin_table(5).whitehead_eta.coeffs
      (0, 1)
  """
  if n == 4:
    # S^3 is an H-space, so [Id, Id] vanishes; eta^3 = 6w.
    return make_table(4, [12], [2], [[6]], [0], [[1]], ["w"], ["eta^2"])
  if n == 5:
    return make_table(5, [2, 2], [24], [[0], [1]], [0, 1], [[1, 0]], ["eps1", "eps2"], ["w"])
  if n == 6:
    return make_table(6, [2], [], [[]], [1], [[0]], ["nu eta^2"], [])
  if n == 7:
    return make_table(7, [2], [], [[]], [0], [[0]], ["nu^2"], [])
  message = f"No built-in table for n={n}; supported values are {list(SUPPORTED_N)}"
  logger.error(message)
  raise ValueError(message)


def load_table(doc: dict) -> GroupTable:
  """Builds a validated table from a table document.

  Args:
      doc: Mapping with the keys in ``TABLE_FIELDS`` and an optional
          ``generator_names`` mapping ``{"g1": [...], "g2": [...]}``.

  Returns:
      GroupTable: The validated table.

  Raises:
      ValueError: If a field is missing or malformed, or an invariant fails.
  """
  if not isinstance(doc, dict):
    _fail("Table document must be a mapping")
  missing = [key for key in TABLE_FIELDS if key not in doc]
  if missing:
    _fail(f"Table document is missing {', '.join(missing)}")
  names = doc.get("generator_names") or {}
  try:
    return make_table(
      doc["n"], doc["g1_orders"], doc["g2_orders"], doc["eta_push"],
      doc["whitehead_eta"], doc["hopf_h"],
      names.get("g1", ()), names.get("g2", ()))
  except TypeError as e:
    _fail(f"Malformed table document: {e}")


def serialize_table(t: GroupTable) -> dict:
  """The document form of a table, accepted back by ``load_table``."""
  return {
    "n": t.n,
    "g1_orders": list(t.g1.orders),
    "g2_orders": list(t.g2.orders),
    "eta_push": [list(row) for row in t.eta_push.matrix] if t.g1.rank else [],
    "whitehead_eta": list(t.whitehead_eta.coeffs),
    "hopf_h": [list(row) for row in t.hopf_h.matrix],
    "generator_names": {"g1": list(t.g1.generator_names), "g2": list(t.g2.generator_names)},
  }


def required_moduli(t: GroupTable) -> Tuple[int, int, int]:
  """Moduli after which the A, C and D blocks stop mattering.

  Shifting an A entry by M_A never changes equations (1) or (3), shifting a C
  entry by M_C never changes them either, and D entries act on g2 only through
  multiples of M_D.

  Returns:
      tuple: ``(M_A, M_C, M_D)``, all positive.

  Examples:
      >>> required_moduli(builtin_table(5))
      (4, 2, 24)
  """
  exponent_g1 = t.g1.exponent()
  if not t.whitehead_eta.is_zero() or not t.hopf_h.is_zero():
    m_a = math.lcm(exponent_g1, 4)
  else:
    m_a = exponent_g1
  m_c = math.lcm(2, t.eta_push.image_exponent())
  m_d = t.g2.exponent()
  return max(m_a, 1), m_c, max(m_d, 1)
