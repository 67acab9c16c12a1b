"""Console script for poincaredeg."""
import logging
import sys

import click

from poincaredeg.classify import classify, is_equivalent
from poincaredeg.closed_forms import known_degree_set
from poincaredeg.complex import parse_complex, product_sum, rank_one_complex, serialize_complex, z_complex
from poincaredeg.config import create_config_file, solver_config
from poincaredeg.homotopy_tables import SUPPORTED_N, builtin_table, load_table, required_moduli, serialize_table
from poincaredeg.reports import degree_set, report_to_document, verdict_to_document
from poincaredeg.solver import UndecidedError, VerdictKind, check_degree
from poincaredeg.utils import dump_document, load_document

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_UNDECIDED = 2
COMPLEX_FORMS = "document path, product:K, zk:K or rank1:LOW/HIGH"


class PoincareGroup(click.Group):
  """Maps every failure onto the documented exit codes.

  0 means computed, 1 a usage or input error, 2 an undecided verdict.
  """

  def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
    try:
      rv = super().main(args=args, prog_name=prog_name, complete_var=complete_var,
                        standalone_mode=False, **extra)
    except click.ClickException as e:
      e.show()
      sys.exit(EXIT_USAGE)
    except click.Abort:
      click.echo("Aborted!", err=True)
      sys.exit(EXIT_USAGE)
    except UndecidedError as e:
      click.echo(f"Undecided: {e}", err=True)
      sys.exit(EXIT_UNDECIDED)
    except (ValueError, OSError) as e:
      click.echo(f"Error: {e}", err=True)
      sys.exit(EXIT_USAGE)
    sys.exit(rv if isinstance(rv, int) else 0)


def _resolve_table(n, table_path, x=None):
  if table_path:
    return load_table(load_document(table_path))
  if n is None and x and ":" not in x:
    n = (load_document(x) or {}).get("n")
  if n is None:
    raise click.UsageError("Give --n, --table, or a complex document for --x")
  return builtin_table(n)


def _resolve_complex(value, table, name):
  """Reads a complex from a document path or a shorthand.

  Shorthands: ``product:K``, ``zk:K`` (n = 7) and ``rank1:LOW/HIGH`` with
  comma-separated coefficients, e.g. ``rank1:2/1`` at n = 4.
  """
  if value is None:
    raise click.UsageError(f"Missing option --{name}")
  kind, _, arg = value.partition(":")
  if kind == "product" and arg:
    return product_sum(table, int(arg))
  if kind == "zk" and arg:
    return z_complex(int(arg), table)
  if kind == "rank1" and "/" in arg:
    low, high = arg.split("/", 1)
    return rank_one_complex(table, _ints(low), _ints(high))
  return parse_complex(load_document(value), table)


def _ints(text):
  return [int(part) for part in text.split(",") if part.strip()]


def _params(ctx, **overrides):
  return solver_config(config_file=ctx.obj.get("config"), **overrides)


def _echo_blocks(W):
  for name, block in (("A", W.A), ("C", W.C), ("D", W.D)):
    click.echo(f"  {name} = {[list(row) for row in block]}")


def solver_options(f):
  f = click.option("--box", type=int, default=None, help="Bound on |A entries| in the general search.")(f)
  f = click.option("--moduli", default=None, help="Certificate moduli, e.g. 2,4,12.")(f)
  f = click.option("--jobs", type=int, default=None, help="Worker processes for degree sweeps.")(f)
  return f


def pair_options(f):
  f = click.option("--y", "y", default=None, help=f"Target complex: {COMPLEX_FORMS}.")(f)
  f = click.option("--x", "x", default=None, help=f"Source complex: {COMPLEX_FORMS}.")(f)
  f = click.option("--table", "table_path", default=None, type=click.Path(), help="Table document.")(f)
  f = click.option("--n", "n", type=int, default=None, help="Use the built-in table for n.")(f)
  return f


@click.group(cls=PoincareGroup)
@click.option("--config", default=None, type=click.Path(), help="Solver configuration document.")
@click.option("--verbose", is_flag=True, help="Log solver progress.")
@click.pass_context
def main(ctx, config, verbose):
  """Degrees of maps between (n-2)-connected (2n-1)-dimensional Poincare complexes."""
  ctx.ensure_object(dict)
  ctx.obj["config"] = config
  if verbose:
    logging.getLogger("poincaredeg").setLevel(logging.INFO)


@main.command()
@pair_options
@click.option("--d", "d", type=int, required=True, help="The degree.")
@solver_options
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def check(ctx, n, table_path, x, y, d, box, moduli, jobs, as_json):
  """Decide whether a map X -> Y of degree D exists."""
  table = _resolve_table(n, table_path, x)
  X, Y = _resolve_complex(x, table, "x"), _resolve_complex(y, table, "y")
  verdict = check_degree(X, Y, d, _params(ctx, box=box, moduli=moduli, jobs=jobs))
  if as_json:
    click.echo(dump_document(dict(d=d, **verdict_to_document(verdict))))
  else:
    click.echo(f"d={d}: {verdict}")
    if verdict.kind == VerdictKind.WITNESS:
      _echo_blocks(verdict.witness)
  if verdict.kind == VerdictKind.WITHIN_BOUNDS:
    ctx.exit(EXIT_UNDECIDED)


@main.command()
@pair_options
@click.option("--range", "R", type=int, default=10, show_default=True, help="Check every d in [-R, R].")
@click.option("--compare", is_flag=True, help="Compare with a known closed form.")
@solver_options
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def degrees(ctx, n, table_path, x, y, R, compare, box, moduli, jobs, as_json):
  """Compute the degree set of X -> Y on a range."""
  table = _resolve_table(n, table_path, x)
  X, Y = _resolve_complex(x, table, "x"), _resolve_complex(y, table, "y")
  report = degree_set(X, Y, R, _params(ctx, box=box, moduli=moduli, jobs=jobs))
  if as_json:
    click.echo(dump_document(report_to_document(report)))
  else:
    for d, verdict in report.verdicts.items():
      click.echo(f"{d:>6}  {verdict}")
    click.echo(f"members: {report.members}")
    if report.progression:
      click.echo(f"CONJECTURE: {report.progression}")
    elif report.exact:
      click.echo("CONJECTURE: no pattern")
    if compare:
      predicate = known_degree_set(X, Y)
      if predicate is None:
        click.echo("closed form: none known for this pair")
      else:
        mismatches = [d for d in report.verdicts if d not in report.undecided and predicate(d) != report.is_member(d)]
        if mismatches:
          click.echo(f"closed form: disagrees at {mismatches}")
        else:
          click.echo("closed form: agrees")
  if not report.exact:
    ctx.exit(EXIT_UNDECIDED)


@main.command()
@pair_options
@solver_options
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def equiv(ctx, n, table_path, x, y, box, moduli, jobs, as_json):
  """Decide whether X and Y are homotopy equivalent."""
  table = _resolve_table(n, table_path, x)
  X, Y = _resolve_complex(x, table, "x"), _resolve_complex(y, table, "y")
  equivalent, witness = is_equivalent(X, Y, _params(ctx, box=box, moduli=moduli, jobs=jobs))
  if as_json:
    click.echo(dump_document({"equivalent": equivalent, "witness": witness.to_document() if witness else None}))
    return
  click.echo("yes" if equivalent else "no")
  if witness:
    _echo_blocks(witness)


@main.command(name="classify")
@click.option("--n", "n", type=int, default=None, help="Use the built-in table for n.")
@click.option("--table", "table_path", default=None, type=click.Path(), help="Table document.")
@click.option("--rank", type=int, default=1, show_default=True)
@solver_options
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def classify_command(ctx, n, table_path, rank, box, moduli, jobs, as_json):
  """List the homotopy types of rank-RANK complexes."""
  table = _resolve_table(n, table_path)
  classes = classify(table, rank, _params(ctx, box=box, moduli=moduli, jobs=jobs))
  if as_json:
    click.echo(dump_document([
      {"representative": serialize_complex(c.representative), "size": c.size,
       "members": [serialize_complex(X) for X in c.members]}
      for c in classes]))
    return
  click.echo(f"{len(classes)} classes")
  for i, c in enumerate(classes, 1):
    click.echo(f"[{i}] size {c.size}: {c.representative}")
    for X in c.members:
      click.echo(f"    {X}")


@main.command()
@click.option("--n", "n", type=int, default=None, help="Only this n.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def tables(n, as_json):
  """Print the built-in homotopy tables."""
  chosen = [builtin_table(n)] if n is not None else [builtin_table(v) for v in SUPPORTED_N]
  if as_json:
    click.echo(dump_document([serialize_table(t) for t in chosen]))
    return
  for t in chosen:
    m_a, m_c, m_d = required_moduli(t)
    click.echo(f"n={t.n}")
    click.echo(f"  g1 = {t.g1}  generators {list(t.g1.generator_names)}")
    click.echo(f"  g2 = {t.g2}  generators {list(t.g2.generator_names)}")
    click.echo(f"  eta_push = {[list(r) for r in t.eta_push.matrix]}")
    click.echo(f"  [Id, Id]eta = {t.whitehead_eta}")
    click.echo(f"  hopf_h = {[list(r) for r in t.hopf_h.matrix]}")
    click.echo(f"  moduli M_A={m_a} M_C={m_c} M_D={m_d}")


@main.command(name="config-template")
@click.argument("path", default="poincaredeg_config.json")
def config_template(path):
  """Write an unfilled solver configuration file."""
  click.echo(create_config_file(path))


if __name__ == "__main__":
  sys.exit(main())  # pragma: no cover
