"""Homotopy equivalence and classification of complexes of a fixed rank."""

import collections
from dataclasses import dataclass
from typing import Dict, Generic, List, Optional, Tuple, TypeVar

from poincaredeg.complex import ComplexSpec, enumerate_complexes
from poincaredeg.config import SolverParams
from poincaredeg.homotopy_tables import GroupTable
from poincaredeg.solver import UndecidedError, VerdictKind, check_degree
from poincaredeg.witness import WitnessMatrix

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)

T = TypeVar("T")


class DisjointSet(Generic[T]):
  """Union-find with path compression and union by rank.

  ``find`` registers unseen elements; ``groups`` lists the sets in the order
  their first element was registered.
  """

  def __init__(self):
    self.parent = {}
    self.rank = {}

  def make_set(self, e: T):
    if e in self.parent:
      return
    self.parent[e] = e
    self.rank[e] = 0

  def find(self, e: T) -> T:
    self.make_set(e)
    root = e
    while self.parent[root] != root:
      root = self.parent[root]
    while self.parent[e] != root:
      self.parent[e], e = root, self.parent[e]
    return root

  def union(self, x: T, y: T):
    x_root = self.find(x)
    y_root = self.find(y)
    if x_root == y_root:
      return
    if self.rank[x_root] < self.rank[y_root]:
      x_root, y_root = y_root, x_root
    self.parent[y_root] = x_root
    if self.rank[x_root] == self.rank[y_root]:
      self.rank[x_root] += 1

  def groups(self) -> List[List[T]]:
    sets = collections.OrderedDict()
    for e in self.parent:
      sets.setdefault(self.find(e), []).append(e)
    return list(sets.values())


@dataclass(frozen=True)
class EquivalenceClass:
  """One homotopy type: its enumeration-least member and all members."""
  representative: ComplexSpec
  members: Tuple[ComplexSpec, ...]

  @property
  def size(self) -> int:
    return len(self.members)


def is_equivalent(X: ComplexSpec, Y: ComplexSpec, params: SolverParams = None) -> Tuple[bool, Optional[WitnessMatrix]]:
  """Decides whether X and Y are homotopy equivalent.

  A map is an equivalence exactly when its degree is +1 or -1, so both signs
  are checked.

  Returns:
      tuple: ``(True, witness)`` or ``(False, None)``.

  Raises:
      UndecidedError: If neither sign has a witness and a bounded search left
          one of them open.
  """
  if X.rank != Y.rank:
    return False, None
  open_signs = []
  for d in (1, -1):
    verdict = check_degree(X, Y, d, params)
    if verdict.kind == VerdictKind.WITNESS:
      return True, verdict.witness
    if verdict.kind == VerdictKind.WITHIN_BOUNDS:
      open_signs.append(d)
  if open_signs:
    message = f"Equivalence of {X} and {Y} is undecided within bounds (degrees {open_signs})"
    logger.warning(message)
    raise UndecidedError(message, X, Y)
  return False, None


def classify(table: GroupTable, k: int, params: SolverParams = None) -> List[EquivalenceClass]:
  """Partitions all rank-k complexes over ``table`` into homotopy types.

  Complexes are visited in enumeration order. Each is compared with the
  representative of every existing class, oldest class first, and joins the
  first one it is equivalent to; otherwise it founds a new class.

  Args:
      table: The homotopy data.
      k: The rank.
      params: Solver parameters.

  Returns:
      list: EquivalenceClass objects in order of their representatives.

  Raises:
      UndecidedError: Propagated from ``is_equivalent``.

  Examples:
      >>> from poincaredeg.homotopy_tables import builtin_table
      >>> len(classify(builtin_table(7), 1))
      2
  """
  classes = DisjointSet()
  representatives: List[ComplexSpec] = []
  for X in enumerate_complexes(table, k):
    classes.make_set(X)
    for rep in representatives:
      if is_equivalent(rep, X, params)[0]:
        classes.union(rep, X)
        break
    else:
      representatives.append(X)
      logger.info(f"New homotopy type #{len(representatives)}: {X}")
  by_root: Dict[ComplexSpec, List[ComplexSpec]] = {}
  for group in classes.groups():
    by_root[classes.find(group[0])] = group
  result = []
  for rep in representatives:
    result.append(EquivalenceClass(rep, tuple(by_root[classes.find(rep)])))
  return result
