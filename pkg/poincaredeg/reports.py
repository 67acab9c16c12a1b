"""Degree sets over a range of degrees.

A ``DegreeReport`` collects ``check_degree`` verdicts for every d in
``[-R, R]``. When every verdict is decided the report is exact on its range,
and ``infer_progressions`` can conjecture a union of residue classes that
describes it.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from poincaredeg.complex import ComplexSpec, parse_complex, serialize_complex
from poincaredeg.config import DEFAULT_MAX_MODULUS, SolverParams
from poincaredeg.homotopy_tables import GroupTable, builtin_table
from poincaredeg.solver import (Certificate, CertificateKind, NoSolutionProven, NoSolutionWithinBounds,
                                VerdictKind, Witness, check_degree)
from poincaredeg.witness import WitnessMatrix

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class APUnion:
  """The integers congruent to one of ``residues`` modulo ``modulus``.

  Always a conjecture: it is only checked on the range it was inferred from.
  """
  modulus: int
  residues: Tuple[int, ...]

  def __contains__(self, d: int) -> bool:
    return d % self.modulus in self.residues

  def to_document(self) -> dict:
    return {"modulus": self.modulus, "residues": list(self.residues)}

  def __str__(self):
    return f"d = {', '.join(str(r) for r in self.residues)} (mod {self.modulus})"


@dataclass
class DegreeReport:
  """Verdicts for d in [-R, R], in ascending d."""
  source: ComplexSpec
  target: ComplexSpec
  R: int
  verdicts: Dict[int, object] = field(default_factory=dict)
  progression: Optional[APUnion] = None

  @property
  def members(self) -> List[int]:
    return [d for d, v in self.verdicts.items() if v.kind == VerdictKind.WITNESS]

  @property
  def undecided(self) -> List[int]:
    return [d for d, v in self.verdicts.items() if v.kind == VerdictKind.WITHIN_BOUNDS]

  @property
  def exact(self) -> bool:
    return not self.undecided

  def is_member(self, d: int) -> bool:
    return self.verdicts[d].kind == VerdictKind.WITNESS


def _check_one(args):
  X, Y, d, params = args
  return d, check_degree(X, Y, d, params)


def degree_set(X: ComplexSpec, Y: ComplexSpec, R: int, params: SolverParams = None) -> DegreeReport:
  """Checks every degree in ``[-R, R]``.

  With ``params.jobs > 1`` the degrees are checked in worker processes; the
  verdicts are collected in ascending d either way, so the report does not
  depend on the job count.

  Args:
      X: Source complex.
      Y: Target complex.
      R: Half-width of the range, at least 0.
      params: Solver parameters.

  Returns:
      DegreeReport: Verdicts for every d, with a progression when the report
      is exact and one fits.

  Raises:
      ValueError: If R is negative.
  """
  params = params or SolverParams()
  if R < 0:
    message = f"Degree range must be non-negative, got {R}"
    logger.error(message)
    raise ValueError(message)
  degrees = list(range(-R, R + 1))
  report = DegreeReport(X, Y, R)
  if params.jobs > 1:
    with ProcessPoolExecutor(max_workers=params.jobs) as executor:
      results = list(executor.map(_check_one, [(X, Y, d, params) for d in degrees]))
  else:
    results = []
    for d in degrees:
      results.append(_check_one((X, Y, d, params)))
      logger.info(f"d={d}: {results[-1][1]}")
  for d, verdict in results:
    report.verdicts[d] = verdict
  if report.exact:
    report.progression = infer_progressions(report, params.max_modulus)
  return report


def infer_progressions(rep: DegreeReport, max_modulus: int = DEFAULT_MAX_MODULUS) -> Optional[APUnion]:
  """Smallest modulus whose residue classes describe the report's members.

  Only moduli ``M <= min(max_modulus, R)`` are tried, so every class has at
  least two representatives in the range.

  Returns:
      APUnion or None: None when the report is not exact or no modulus fits.

  Examples:
      A report whose members are the multiples of 6 in [-48, 48] gives
      ``APUnion(modulus=6, residues=(0,))``.
  """
  if not rep.exact:
    logger.warning("Not inferring a progression from a report with undecided degrees")
    return None
  members = set(rep.members)
  for modulus in range(1, min(max_modulus, rep.R) + 1):
    residues = sorted({d % modulus for d in members})
    if all((d % modulus in residues) == (d in members) for d in rep.verdicts):
      return APUnion(modulus, tuple(residues))
  return None


# -- documents ------------------------------------------------------------------

def verdict_to_document(verdict) -> dict:
  doc = {"verdict": verdict.kind.value}
  if verdict.kind == VerdictKind.WITNESS:
    doc["witness"] = verdict.witness.to_document()
  elif verdict.kind == VerdictKind.PROVEN:
    cert = verdict.certificate
    doc["certificate"] = {"kind": cert.kind.value, "modulus": cert.modulus, "detail": cert.detail}
  else:
    doc["box"] = verdict.box
    doc["moduli"] = list(verdict.moduli)
    doc["max_residue_classes"] = verdict.max_residue_classes
  return doc


def verdict_from_document(doc: dict):
  """Inverse of ``verdict_to_document``.

  Raises:
      ValueError: On an unknown verdict kind or missing fields.
  """
  try:
    kind = VerdictKind(doc["verdict"])
    if kind == VerdictKind.WITNESS:
      return Witness(WitnessMatrix.from_document(doc["witness"]))
    if kind == VerdictKind.PROVEN:
      cert = doc["certificate"]
      return NoSolutionProven(Certificate(CertificateKind(cert["kind"]), cert.get("modulus"), cert.get("detail", "")))
    return NoSolutionWithinBounds(doc["box"], tuple(doc["moduli"]), doc["max_residue_classes"])
  except (KeyError, TypeError, ValueError) as e:
    message = f"Malformed verdict document {doc!r}: {e}"
    logger.error(message)
    raise ValueError(message)


def report_to_document(rep: DegreeReport) -> dict:
  return {
    "source": serialize_complex(rep.source),
    "target": serialize_complex(rep.target),
    "range": rep.R,
    "exact": rep.exact,
    "members": rep.members,
    "verdicts": [dict(d=d, **verdict_to_document(v)) for d, v in rep.verdicts.items()],
    "progression": rep.progression.to_document() if rep.progression else None,
  }


def report_from_document(doc: dict, table: GroupTable = None) -> DegreeReport:
  """Rebuilds a report; ``table`` defaults to the built-in table for the source's n."""
  table = table or builtin_table(doc["source"]["n"])
  report = DegreeReport(parse_complex(doc["source"], table), parse_complex(doc["target"], table), doc["range"])
  for entry in doc["verdicts"]:
    report.verdicts[entry["d"]] = verdict_from_document(entry)
  if doc.get("progression"):
    report.progression = APUnion(doc["progression"]["modulus"], tuple(doc["progression"]["residues"]))
  return report
