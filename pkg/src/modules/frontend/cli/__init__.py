"""
Module: cli
Layer: frontend

The fdea command-line tool: ingest, evaluate, rank, compare, fuzzify.
"""

from .interface import (
    CliError,
    DatasetFormatError,
    EvaluationError,
    InputFormat,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_INFEASIBLE,
    load_dataset,
    write_dataset,
    load_external_ranks,
    evaluate,
    rank_and_report,
    run_metadata,
)
from .internal.render import render_results, render_report, render_comparison
from .commands import cli, main

__all__ = [
    "CliError",
    "DatasetFormatError",
    "EvaluationError",
    "InputFormat",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_INFEASIBLE",
    "load_dataset",
    "write_dataset",
    "load_external_ranks",
    "evaluate",
    "rank_and_report",
    "run_metadata",
    "render_results",
    "render_report",
    "render_comparison",
    "cli",
    "main",
]
