"""derq command line.

Exit codes: 0 pass/true, 1 fail/false, 2 usage error, 3 input error.
"""
import functools
import json
import logging
import sys
from pathlib import Path

import click

from .client import Workbench
from .config import load_config
from .enumeration import catalog_digest, invert_witness, verify_witness
from .errors import BudgetExceededError, DerqError
from .permgroup import format_permutation, sylow2_generators
from .series import BOUND_VARIANTS, derived_series

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 3


def status(message):
    click.echo(message, err=True)


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceededError as e:
            status(f"⚠️  {e}")
            for key, value in sorted(e.progress.items()):
                status(f"   {key}: {value}")
            sys.exit(e.exit_code)
        except DerqError as e:
            status(f"❌ {e}")
            sys.exit(e.exit_code)
    return wrapper


def run_options(fn):
    """Flags shared by every subcommand; they override env and derq.yaml."""
    options = [
        click.option("--format", "output_format", type=click.Choice(["text", "json"]), default=None,
                     help="Output format (default text)"),
        click.option("--out", "output", type=click.Path(dir_okay=False), default=None,
                     help="Write the result document to this file"),
        click.option("--jobs", type=int, default=None, help="Worker processes"),
        click.option("--budget-seconds", type=float, default=None, help="Wall-clock budget"),
        click.option("--seed", type=int, default=None, help="Seed for sampled checks"),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def workbench(command, **flags):
    config = load_config(command=command, **flags)
    return Workbench(config, progress=config.output_format == "text" and sys.stderr.isatty())


def emit(wb, document, lines):
    """JSON document or text lines to --out or stdout."""
    config = wb.config
    if config.output_format == "json":
        text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if config.output:
        Path(config.output).write_text(text)
        status(f"✅ Written to {config.output}")
    else:
        click.echo(text, nl=False)


def _group_source(wb, file, group, p):
    if file and group:
        raise click.UsageError("give either FILE or --group, not both")
    if group:
        return wb.presentations.named(group, p)
    if file:
        return wb.presentations.load(file)
    raise click.UsageError("a presentation FILE or --group NAME is required")


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
def cli(verbose):
    """derq: small derived quotients in finite p-groups."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.argument("file", required=False, type=click.Path(dir_okay=False))
@click.option("--group", help="Library group name instead of FILE")
@click.option("--p", "prime", type=int, help="Prime for library groups")
@run_options
@handle_errors
def check(file, group, prime, **flags):
    """Run the consistency check on a presentation."""
    wb = workbench("check", prime=prime, **flags)
    pres = _group_source(wb, file, group, prime)
    status(f"🔎 Checking {pres.name or file} (p={pres.prime}, n={pres.rank})...")
    violations = wb.presentations.check(pres)
    emit(wb, {"name": pres.name, "consistent": not violations, "violations": violations},
         [f"violation: {v}" for v in violations] or ["consistent"])
    if violations:
        status(f"❌ {len(violations)} consistency test(s) failed")
        sys.exit(EXIT_FAIL)
    status("✅ Consistent")


@cli.command()
@click.argument("file", required=False, type=click.Path(dir_okay=False))
@click.option("--sylow2", "sylow2_degree", type=int, help="Scan the Sylow 2-subgroup of Sym(m)")
@click.option("--group", help="Library group name instead of FILE")
@click.option("--p", "prime", type=int, help="Prime for library groups")
@run_options
@handle_errors
def scan(file, sylow2_degree, group, prime, **flags):
    """Series, small derived quotients and chain checks of one group."""
    wb = workbench("scan", prime=prime, degree=sylow2_degree, **flags)
    if sylow2_degree is not None:
        if file or group:
            raise click.UsageError("--sylow2 cannot be combined with a presentation")
        engine = wb.sylow2(sylow2_degree)
        label = f"Sylow 2-subgroup of Sym({sylow2_degree})"
    else:
        pres = _group_source(wb, file, group, prime)
        engine = wb.pc(pres)
        label = pres.name or file
    status(f"🔎 Scanning {label}...")
    report = wb.scan(engine)
    emit(wb, report.to_dict(), report.summary_lines())
    failed = report.failed_checks()
    if failed:
        status(f"⚠️  Failed checks: {', '.join(failed)}")
    else:
        status("✅ Scan complete")


@cli.command()
@click.argument("m", type=int)
@run_options
@handle_errors
def sylow2(m, **flags):
    """Sylow 2-subgroup of Sym(m) and its small derived quotient at d = delta - 2."""
    wb = workbench("sylow2", degree=m, **flags)
    gens = sylow2_generators(m)
    engine = wb.sylow2(m)
    delta = m.bit_length() - 1
    exps = [t.order_exp() for t in derived_series(engine.whole())]
    document = {
        "degree": m,
        "generators": [format_permutation(g) for g in gens],
        "order_exp": exps[0],
        "derived_exps": exps,
    }
    lines = [
        f"generators: {' '.join(document['generators'])}",
        f"order: 2^{exps[0]}",
        f"derived series exponents: {exps}",
    ]
    ok = True
    if delta >= 2:
        d = delta - 2
        quotient = exps[d] - exps[d + 1] if d + 1 < len(exps) else exps[d]
        expected = 2 ** d + 1
        document.update({"d": d, "quotient_exp": quotient, "expected_quotient_exp": expected})
        lines.append(f"log2 |P^({d})/P^({d + 1})| = {quotient} (expected {expected})")
        ok = quotient == expected
    emit(wb, document, lines)
    if not ok:
        status("❌ Quotient size differs from 2^(delta-2)+1")
        sys.exit(EXIT_FAIL)
    status("✅ Done")


@cli.command()
@click.option("--p", "prime", type=int, required=True, help="Odd prime")
@click.option("--samples", type=int, default=2, show_default=True,
              help="Classes spot-checked by an isomorphism witness")
@run_options
@handle_errors
def verify(prime, samples, **flags):
    """Census of maximal-class groups of order p^6 with two small derived quotients."""
    wb = workbench("verify", prime=prime, **flags)
    status(f"🔎 Enumerating maximal-class groups of order {prime}^6...")
    report = wb.catalogs.verify(prime, samples=samples)
    emit(wb, report.to_dict(), report.summary_lines())
    if not report.passed:
        for failure in report.failures:
            status(f"❌ {failure}")
        sys.exit(EXIT_FAIL)
    status(f"✅ {report.two_small} two-small classes")


@cli.command("enumerate")
@click.option("--p", "prime", type=int, required=True, help="Odd prime")
@run_options
@handle_errors
def enumerate_cmd(prime, **flags):
    """Catalog of maximal-class groups of order p^6."""
    wb = workbench("enumerate", prime=prime, **flags)
    status(f"🔎 Enumerating maximal-class groups of order {prime}^6...")
    entries = wb.enumerate(prime)
    digest = catalog_digest(entries)
    if wb.config.output:
        wb.catalogs.save(entries, wb.config.output)
        status(f"✅ Catalog of {len(entries)} classes written to {wb.config.output}")
        return
    lines = [f"{e.name}: {e.flags}" for e in entries]
    lines += [f"{combo}: {count}" for combo, count in digest["by_flags"].items()]
    emit(wb, [e.to_dict() for e in entries], lines)
    status(f"✅ {len(entries)} classes")


@cli.command()
@click.option("--p", "prime", type=int, required=True, help="Prime p >= 5")
@run_options
@handle_errors
def count(prime, **flags):
    """Evaluate p + 4 + gcd(4,p-1) + gcd(5,p-1) + gcd(6,p-1)."""
    wb = workbench("count", prime=prime, **flags)
    value = wb.catalogs.count(prime)
    emit(wb, {"p": prime, "count": value}, [str(value)])


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Derived length minus one")
@click.option("--variant", type=click.Choice(sorted(BOUND_VARIANTS)), default="hall", show_default=True)
@run_options
@handle_errors
def bounds(d, variant, **flags):
    """Lower bound for log_p |G| given derived length d + 1."""
    wb = workbench("bounds", **flags)
    value = wb.scans.bound(d, variant)
    emit(wb, {"d": d, "variant": variant, "log_p_order_at_least": value}, [str(value)])


@cli.command()
@click.argument("file_a", type=click.Path(dir_okay=False))
@click.argument("file_b", type=click.Path(dir_okay=False))
@run_options
@handle_errors
def iso(file_a, file_b, **flags):
    """Decide whether two presentations define isomorphic groups."""
    wb = workbench("iso", inputs=(file_a, file_b), **flags)
    A = wb.presentations.load(file_a)
    B = wb.presentations.load(file_b)
    status(f"🔎 Comparing {A.name} and {B.name}...")
    found, witness = wb.catalogs.isomorphic(A, B)
    if found and not (verify_witness(A, B, witness) and verify_witness(B, A, invert_witness(A, B, witness))):
        status("❌ Witness failed verification")
        sys.exit(EXIT_FAIL)
    lines = ["true" if found else "false"]
    if found:
        lines += [f"a{i + 1} -> {list(w)}" for i, w in enumerate(witness.images)]
    else:
        lines.append(f"reason: {witness.certificate.get('reason')}")
    emit(wb, {"isomorphic": found, "witness": witness.to_dict()}, lines)
    if not found:
        sys.exit(EXIT_FAIL)


@cli.command()
@click.option("--catalog", "catalog_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--d", "d_min", type=int, default=2, show_default=True, help="Smallest index searched")
@run_options
@handle_errors
def search(catalog_path, d_min, **flags):
    """Look for small derived quotients at d >= D in a saved catalog."""
    wb = workbench("search", inputs=(catalog_path,), **flags)
    entries = wb.catalogs.load(catalog_path)
    hits = wb.catalogs.search(entries, d_min)
    emit(
        wb,
        {"d_min": d_min, "entries": len(entries), "hits": [h.__dict__ for h in hits]},
        [f"{h.name}: d={h.d} {h.chain_class}" for h in hits] or [f"no small quotients at d >= {d_min}"],
    )
    status(f"🔎 {len(hits)} hit(s) in {len(entries)} entries")


def main():
    cli(prog_name="derq")


if __name__ == "__main__":
    main()
