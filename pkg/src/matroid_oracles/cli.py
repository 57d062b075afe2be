"""Command-line interface for the matroid oracles toolkit."""

import json
import logging
from dataclasses import replace
from pathlib import Path
from typing import TYPE_CHECKING, Optional

import typer
from rich.console import Console
from rich.table import Table

if TYPE_CHECKING:
    from matroid_oracles.core.config import Settings
    from matroid_oracles.core.instance import Instance
    from matroid_oracles.instances import GeneratorConfig
    from matroid_oracles.solvers import BaseSolver, SolveReport

app = typer.Typer(
    name="matroid-oracles",
    help="Matroid intersection under restricted oracles - solve, verify and separate",
    add_completion=False,
)

console = Console()

EXIT_MISMATCH = 1
EXIT_USAGE = 2

_CONFIG_OPTION = typer.Option(None, "--config", "-c", help="Path to configuration file")
_VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Log debug output to the console")


def _setup(config: Optional[Path], verbose: bool) -> "Settings":
    """Load .env and settings, then configure logging once."""
    from dotenv import load_dotenv
    from pydantic import ValidationError

    from matroid_oracles.core.config import load_config

    load_dotenv()
    try:
        settings = load_config(config)
    except (ValidationError, ValueError) as e:
        console.print(f"[red]Invalid configuration:[/red] {e}")
        raise typer.Exit(EXIT_USAGE)

    console_level = "DEBUG" if verbose else settings.logging.console_level
    stream = logging.StreamHandler()
    stream.setLevel(console_level)
    handlers: list[logging.Handler] = [stream]
    if settings.logging.log_file:
        log_path = Path(settings.logging.log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path)
        file_handler.setLevel(settings.logging.file_level)
        handlers.append(file_handler)
    logging.basicConfig(
        level=logging.DEBUG,
        format=settings.logging.format,
        handlers=handlers,
        force=True,
    )
    # Package-wide threshold; handlers filter further
    package_level = "DEBUG" if verbose else settings.app.log_level
    logging.getLogger("matroid_oracles").setLevel(package_level)
    return settings


def _load(path: Path) -> "Instance":
    from matroid_oracles.core.errors import InstanceFormatError
    from matroid_oracles.instances import load_instance

    if not path.exists():
        console.print(f"[red]Instance file not found: {path}[/red]")
        raise typer.Exit(EXIT_USAGE)
    try:
        return load_instance(path)
    except InstanceFormatError as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_USAGE)


def _check_solver(oracle: str, weighted: bool) -> type["BaseSolver"]:
    from matroid_oracles.solvers import get_registry

    registry = get_registry()
    solver_class = registry.get_solver_class(oracle)
    if solver_class is None:
        console.print(f"[red]Unknown oracle: {oracle}[/red]")
        console.print(f"Available: {', '.join(registry.list_solvers())}")
        raise typer.Exit(EXIT_USAGE)
    if weighted and not solver_class.weighted:
        console.print(f"[red]Solver '{oracle}' is unweighted; drop --weighted[/red]")
        raise typer.Exit(EXIT_USAGE)
    return solver_class


def _corpus_config(solver_class: type["BaseSolver"], base: "GeneratorConfig") -> "GeneratorConfig":
    """Restrict M1 kinds to the structure the solver trusts."""
    m1_kinds = {"partition": ("partition-one",), "split": ("split",)}.get(
        solver_class.structure or "", base.m1_kinds
    )
    return replace(base, m1_kinds=m1_kinds)


def _print_report(report: "SolveReport") -> None:
    from matroid_oracles.core.ground import format_mask

    table = Table(title=f"{report.solver} on a {report.oracle_kind.value} oracle (n={report.n})")
    table.add_column("k", style="cyan", justify="right")
    table.add_column("Set", style="white")
    table.add_column("Weight", style="green", justify="right")
    for k, (s, w) in enumerate(zip(report.sets, report.weights)):
        table.add_row(str(k), format_mask(s), str(w))
    console.print(table)

    console.print(f"Max cardinality: [bold]{report.max_cardinality}[/bold]")
    if report.weighted:
        console.print(
            f"Optimum: [bold]{report.optimum_weight}[/bold] at "
            f"{format_mask(report.optimum_set)} (k={report.optimum_size})"
        )
    if report.certificate is not None:
        console.print(
            f"Certificate Z = {format_mask(report.certificate)}, "
            f"r1(Z) + r2(E \\ Z) = {report.certificate_value}"
        )
    queries = ", ".join(f"{k}={v}" for k, v in report.counters.to_dict().items())
    console.print(f"[dim]Queries: {queries}[/dim]")


@app.command()
def solve(
    input_path: Path = typer.Option(..., "--in", "-i", help="Instance JSON file"),
    oracle: str = typer.Option("sum", "--oracle", "-o", help="Solver / oracle name"),
    weighted: bool = typer.Option(False, "--weighted", help="Maximize weight, not size"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON"),
    audit: bool = typer.Option(False, "--audit", help="Assert invariants with full access"),
    config: Optional[Path] = _CONFIG_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Solve one instance from the empty set to a maximum common independent set."""
    from matroid_oracles.core.errors import CapabilityError
    from matroid_oracles.solvers import run_instance

    settings = _setup(config, verbose)
    _check_solver(oracle, weighted)
    instance = _load(input_path)

    try:
        report = run_instance(
            oracle,
            instance,
            weighted=weighted,
            audit=audit or settings.solver.audit,
            depth_cap=settings.solver.bfs_depth_cap,
        )
    except CapabilityError as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_USAGE)

    if as_json:
        typer.echo(json.dumps(report.to_dict(), indent=2))
    else:
        _print_report(report)


@app.command()
def verify(
    input_path: Optional[Path] = typer.Option(
        None, "--in", "-i", help="Instance JSON file (default: seeded corpus)"
    ),
    oracle: str = typer.Option("sum", "--oracle", "-o", help="Solver / oracle name"),
    weighted: bool = typer.Option(False, "--weighted", help="Compare weighted optima"),
    count: Optional[int] = typer.Option(None, "--count", help="Corpus size (overrides config)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Corpus seed (overrides config)"),
    max_n: Optional[int] = typer.Option(None, "--max-n", help="Largest ground set in corpus"),
    config: Optional[Path] = _CONFIG_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Solve and compare against brute force; exit 1 on any mismatch."""
    from rich.progress import Progress, SpinnerColumn, TextColumn

    from matroid_oracles.core.errors import BudgetExceededError, CapabilityError
    from matroid_oracles.instances import GeneratorConfig, corpus
    from matroid_oracles.oracles import MatroidPair
    from matroid_oracles.solvers import run_instance
    from matroid_oracles.verify import brute_force, compare_report

    settings = _setup(config, verbose)
    solver_class = _check_solver(oracle, weighted)

    if input_path is not None:
        instances = [_load(input_path)]
    else:
        base = GeneratorConfig.from_settings(
            settings.generator, seed if seed is not None else settings.verify.corpus_seed
        )
        base = _corpus_config(solver_class, base)
        size = count if count is not None else settings.verify.corpus_size
        instances = list(corpus(base, size, max_n or settings.verify.max_n))

    allowed = solver_class.required_queries
    budget_factor = settings.verify.query_budget_factor if oracle == "sum" else None
    failures: list[tuple[str, str]] = []

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        progress.add_task(f"Verifying {len(instances)} instance(s)...", total=None)
        for instance in instances:
            try:
                report = run_instance(
                    oracle,
                    instance,
                    weighted=weighted,
                    audit=settings.solver.audit,
                    depth_cap=settings.solver.bfs_depth_cap,
                )
                pair = MatroidPair(instance.m1, instance.m2)
                truth = brute_force(pair, instance.weights, settings.verify.brute_force_budget)
            except (CapabilityError, BudgetExceededError) as e:
                console.print(f"[red]{e}[/red]")
                raise typer.Exit(EXIT_USAGE)
            result = compare_report(report, truth, pair, allowed, budget_factor)
            for mismatch in result.mismatches:
                failures.append((instance.name, f"{mismatch.rule}: {mismatch.message}"))

    if failures:
        table = Table(title="Verification Mismatches")
        table.add_column("Instance", style="cyan")
        table.add_column("Mismatch", style="red")
        for name, message in failures:
            table.add_row(name, message)
        console.print(table)
        raise typer.Exit(EXIT_MISMATCH)
    console.print(f"[green]{len(instances)} instance(s) agree with brute force[/green]")


@app.command()
def witness(
    out: Optional[Path] = typer.Option(
        None, "--out", help="Directory for witness instance files"
    ),
    config: Optional[Path] = _CONFIG_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Search for oracle-separation witnesses and re-verify them."""
    from matroid_oracles.core.ground import Weighting, format_mask
    from matroid_oracles.core.instance import Instance
    from matroid_oracles.instances import save_instance
    from matroid_oracles.verify import (
        STANDARD_TARGETS,
        check_free_matroid_blindness,
        check_rank_one_blindness,
        find_separation_witness,
        verify_witness,
    )

    settings = _setup(config, verbose)
    table = Table(title="Oracle Separation Witnesses")
    table.add_column("Target", style="cyan")
    table.add_column("Agreeing", style="white")
    table.add_column("Subset", style="white")
    table.add_column("Values", style="green")
    table.add_column("Verified", style="white")
    ok = True

    for entry in STANDARD_TARGETS:
        truncation = None if entry.truncation is None else settings.witness.truncation
        found = find_separation_witness(
            entry.target,
            entry.agreeing,
            truncation=truncation,
            values=entry.values if truncation == entry.truncation else None,
            max_vertices=settings.witness.max_vertices,
            edge_count=settings.witness.edge_count,
        )
        agreeing = "+".join(q.value for q in entry.agreeing)
        if found is None:
            table.add_row(entry.target.value, agreeing, "-", "-", "[red]not found[/red]")
            ok = False
            continue
        verified = verify_witness(found)
        ok = ok and verified
        table.add_row(
            entry.target.value,
            agreeing,
            format_mask(found.subset),
            f"{found.first_value} vs {found.second_value}",
            "[green]yes[/green]" if verified else "[red]no[/red]",
        )
        if out is not None and verified:
            for label, pair in (("first", found.first_pair), ("second", found.second_pair)):
                instance = Instance(
                    m1=pair.m1,
                    m2=pair.m2,
                    weights=Weighting.unit(pair.n),
                    name=f"witness-{entry.target.value}-{label}",
                    annotation=found.annotation(),
                )
                save_instance(instance, out / f"witness-{entry.target.value}-{label}.json")

    console.print(table)
    free_ok = check_free_matroid_blindness()
    rank_one_ok = check_rank_one_blindness()
    console.print(f"Max blind to M2 when M1 is free: {'yes' if free_ok else 'NO'}")
    console.print(f"Min and CI blind to M2 when M1 = U(1,n): {'yes' if rank_one_ok else 'NO'}")
    if out is not None:
        console.print(f"[green]Witness files written to {out}[/green]")
    if not (ok and free_ok and rank_one_ok):
        raise typer.Exit(EXIT_MISMATCH)


@app.command()
def gen(
    seed: int = typer.Option(0, "--seed", help="First seed"),
    n: Optional[int] = typer.Option(None, "--n", help="Ground set size (overrides config)"),
    count: int = typer.Option(1, "--count", help="Number of instances"),
    m1_kind: Optional[list[str]] = typer.Option(
        None, "--m1-kind", help="Allowed kind for M1 (can be repeated)"
    ),
    m2_kind: Optional[list[str]] = typer.Option(
        None, "--m2-kind", help="Allowed kind for M2 (can be repeated)"
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Output directory (default: stdout)"),
    config: Optional[Path] = _CONFIG_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Generate seeded random instances."""
    from matroid_oracles.instances import GeneratorConfig, emit_instance, generate, save_instance

    settings = _setup(config, verbose)
    try:
        base = GeneratorConfig(
            seed=seed,
            n=n if n is not None else settings.generator.n,
            m1_kinds=tuple(m1_kind or settings.generator.m1_kinds),
            m2_kinds=tuple(m2_kind or settings.generator.m2_kinds),
            weight_min=settings.generator.weight_min,
            weight_max=settings.generator.weight_max,
        )
    except ValueError as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_USAGE)

    for offset in range(count):
        instance = generate(replace(base, seed=seed + offset))
        if out is None:
            typer.echo(emit_instance(instance), nl=False)
        else:
            save_instance(instance, out / f"{instance.name}.json")
    if out is not None:
        console.print(f"[green]{count} instance(s) written to {out}[/green]")


@app.command()
def stats(
    oracle: Optional[list[str]] = typer.Option(
        None, "--oracle", "-o", help="Solver to include (can be repeated; default all)"
    ),
    count: int = typer.Option(50, "--count", help="Instances per solver"),
    seed: int = typer.Option(0, "--seed", help="Corpus seed"),
    max_n: int = typer.Option(8, "--max-n", help="Largest ground set in corpus"),
    config: Optional[Path] = _CONFIG_OPTION,
    verbose: bool = _VERBOSE_OPTION,
) -> None:
    """Aggregate query counts per solver over a seeded corpus."""
    import pandas as pd

    from matroid_oracles.instances import GeneratorConfig, corpus
    from matroid_oracles.solvers import get_registry, run_instance

    settings = _setup(config, verbose)
    registry = get_registry()
    names = oracle or registry.list_solvers()
    rows = []
    for name in names:
        solver_class = _check_solver(name, False)
        base = _corpus_config(solver_class, GeneratorConfig.from_settings(settings.generator, seed))
        for instance in corpus(base, count, max_n):
            report = run_instance(name, instance, weighted=solver_class.weighted)
            record = report.stats()
            rows.append(
                {
                    "solver": name,
                    "oracle_kind": record["oracle_kind"],
                    "n": record["n"],
                    "augmentations": record["augmentations"],
                    **{q: record["queries_by_type"][q] for q in ("sum", "min", "max", "ci")},
                }
            )

    df = pd.DataFrame(rows)
    summary = df.groupby(["solver", "oracle_kind"]).agg(
        instances=("n", "size"),
        sum_mean=("sum", "mean"),
        sum_max=("sum", "max"),
        max_mean=("max", "mean"),
        ci_mean=("ci", "mean"),
        ci_max=("ci", "max"),
    )

    table = Table(title=f"Query Statistics ({count} instances per solver, n <= {max_n})")
    table.add_column("Solver", style="cyan")
    table.add_column("Oracle", style="white")
    for column in ("Instances", "Sum (mean)", "Sum (max)", "Max (mean)", "CI (mean)", "CI (max)"):
        table.add_column(column, justify="right")
    for (solver_name, kind), row in summary.iterrows():
        table.add_row(
            str(solver_name),
            str(kind),
            str(int(row["instances"])),
            f"{row['sum_mean']:.1f}",
            str(int(row["sum_max"])),
            f"{row['max_mean']:.1f}",
            f"{row['ci_mean']:.1f}",
            str(int(row["ci_max"])),
        )
    console.print(table)


@app.command()
def solvers() -> None:
    """List all available solvers."""
    from matroid_oracles.solvers import get_registry

    table = Table(title="Available Solvers")
    table.add_column("Name", style="cyan")
    table.add_column("Description", style="white")
    table.add_column("Queries", style="white")
    table.add_column("Weighted", style="white")
    table.add_column("M1 Structure", style="white")
    table.add_column("Class", style="dim")

    for info in get_registry().get_solver_info():
        table.add_row(
            info["name"],
            info["description"],
            info["queries"],
            info["weighted"],
            info["structure"],
            info["class"],
        )
    console.print(table)


@app.command()
def version() -> None:
    """Show version information."""
    from matroid_oracles import __version__

    console.print(f"[bold]Matroid Oracles[/bold] v{__version__}")


def main() -> None:
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
