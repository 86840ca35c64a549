"""The fdea click command group and its exit-code wrapper."""

from typing import Any, Callable, List, Optional
import functools
import shutil
import sys

import click

from ...infrastructure.config_manager import (
    ConfigManagerError,
    RunConfig,
    create_interface as create_config,
    VALID_FORMATS,
    VALID_LOG_FORMATS,
    VALID_MODES,
    VALID_ORIENTATIONS,
    VALID_SOLVERS,
)
from ...infrastructure.log_manager import LogManagerError, create_interface as create_log
from ...dea.models import ModelsError
from ...dea.scalarize import ScalarizeError
from .interface import (
    CliError,
    EvaluationError,
    InputFormat,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_INFEASIBLE,
    evaluate,
    load_dataset,
    load_external_ranks,
    rank_and_report,
    run_metadata,
    write_dataset,
)
from .internal.render import render_comparison, render_report, render_results
from .internal.fixtures import FIXTURES, fixture_path

INPUT_FORMATS = [f.value for f in InputFormat]


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


def run_options(func: Callable) -> Callable:
    """Options shared by every command that evaluates a dataset."""
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                     help="YAML file with a 'run' section."),
        click.option("--epsilon", type=float, help="Lower bound on every multiplier."),
        click.option("--seed", type=int, help="Weight population seed (overrides FDEA_SEED)."),
        click.option("--pop-mult", "population_multiplier", type=int,
                     help="Weight vectors per decision variable."),
        click.option("--mode", type=click.Choice(VALID_MODES)),
        click.option("--orientation", type=click.Choice(VALID_ORIENTATIONS)),
        click.option("--format", "output_format", type=click.Choice(VALID_FORMATS)),
        click.option("--input-format", type=click.Choice(INPUT_FORMATS), default="auto",
                     show_default=True),
        click.option("--workers", type=int, help="Threads for per-DMU evaluation."),
        click.option("--solver", type=click.Choice(VALID_SOLVERS)),
        click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"],
                                                      case_sensitive=False)),
        click.option("--log-format", type=click.Choice(VALID_LOG_FORMATS)),
        click.option("-o", "--output", type=click.Path(dir_okay=False),
                     help="Write the report here instead of stdout."),
    ]
    for option in reversed(options):
        func = option(func)

    @functools.wraps(func)
    def wrapper(**kwargs: Any) -> Any:
        ctx = click.get_current_context()
        config_path = kwargs.pop("config_path")
        overrides = {k: kwargs.pop(k) for k in (
            "epsilon", "seed", "population_multiplier", "mode", "orientation",
            "output_format", "workers", "solver", "log_level", "log_format")}
        if overrides["log_level"]:
            overrides["log_level"] = overrides["log_level"].upper()
        config = create_config()
        if config_path:
            config.load_config(config_path)
        run = config.get_run_config(overrides)
        config.cleanup()
        log = create_log({"log_level": run.log_level, "log_format": run.log_format})
        ctx.call_on_close(log.cleanup)
        return func(run=run, **kwargs)

    return wrapper


@click.group()
@click.version_option(package_name="fdea", prog_name="fdea")
def cli() -> None:
    """Fuzzy multi-objective optimistic/pessimistic DEA."""


@cli.command("evaluate")
@click.argument("dataset_path", type=click.Path())
@run_options
def evaluate_command(dataset_path: str, run: RunConfig, input_format: str,
                     output: Optional[str]) -> None:
    """Efficiency bounds and scalarized scores for every DMU."""
    dataset = load_dataset(dataset_path, input_format)
    results = evaluate(dataset, run)
    _emit(render_results(results, dataset, run_metadata(dataset, run), run.output_format),
          output)


@cli.command("rank")
@click.argument("dataset_path", type=click.Path())
@click.option("--external-ranks", type=click.Path(), help="CSV with id and rank columns.")
@click.option("--external-label", default=None, help="Name of the external ranking.")
@click.option("--reference-rho", type=float, help="Published rho printed next to ours.")
@run_options
def rank_command(dataset_path: str, external_ranks: Optional[str],
                 external_label: Optional[str], reference_rho: Optional[float],
                 run: RunConfig, input_format: str, output: Optional[str]) -> None:
    """Geometric-average ranking, classification and recommendation."""
    dataset = load_dataset(dataset_path, input_format)
    external = load_external_ranks(external_ranks) if external_ranks else None
    report = rank_and_report(evaluate(dataset, run), dataset, run, external,
                             external_label or _stem(external_ranks), reference_rho)
    _emit(render_report(report, run.output_format), output)


@cli.command("compare")
@click.argument("dataset_path", type=click.Path())
@click.option("--external-ranks", type=click.Path(), required=True,
              help="CSV with id and rank columns.")
@click.option("--external-label", default=None, help="Name of the external ranking.")
@click.option("--reference-rho", type=float, help="Published rho printed next to ours.")
@run_options
def compare_command(dataset_path: str, external_ranks: str, external_label: Optional[str],
                    reference_rho: Optional[float], run: RunConfig, input_format: str,
                    output: Optional[str]) -> None:
    """Spearman rho between our ranking and an external one."""
    dataset = load_dataset(dataset_path, input_format)
    external = load_external_ranks(external_ranks)
    report = rank_and_report(evaluate(dataset, run), dataset, run, external,
                             external_label or _stem(external_ranks), reference_rho)
    _emit(render_comparison(report, run.output_format), output)


@cli.command("fuzzify")
@click.argument("raw_path", type=click.Path())
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.option("--to", "target", type=click.Choice(["fuzzy-csv", "fuzzy-json"]),
              default="fuzzy-csv", show_default=True)
def fuzzify_command(raw_path: str, output: str, target: str) -> None:
    """Turn per-period observations into (min, mean, max) TFNs."""
    dataset = load_dataset(raw_path, InputFormat.RAW_CSV)
    write_dataset(dataset, output, target)
    click.echo(f"wrote {dataset.n} DMUs to {output}", err=True)


@cli.command("fixtures")
@click.argument("name", required=False)
@click.option("-o", "--output", type=click.Path(dir_okay=False))
def fixtures_command(name: Optional[str], output: Optional[str]) -> None:
    """List the bundled datasets, or print/export one."""
    if name is None:
        for fixture, description in FIXTURES.items():
            click.echo(f"{fixture}\t{description}")
        return
    if name not in FIXTURES:
        raise click.BadParameter(f"unknown fixture {name!r}; try one of {', '.join(FIXTURES)}",
                                 param_hint="NAME")
    path = fixture_path(name)
    if output:
        shutil.copyfile(path, output)
    else:
        click.echo(path.read_text(encoding="utf-8"), nl=False)


def _stem(path: Optional[str]) -> str:
    if not path:
        return "external"
    name = path.replace("\\", "/").rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[0]


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run fdea and map failures to exit codes.

    0 success, 1 usage/parse/config error, 2 model infeasibility.
    """
    try:
        code = cli.main(args=argv, prog_name="fdea", standalone_mode=False)
    except EvaluationError as exc:
        click.echo(f"Error: model infeasible\n{exc}", err=True)
        return EXIT_INFEASIBLE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except (CliError, ConfigManagerError, LogManagerError, ModelsError, ScalarizeError,
            OSError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
