"""
Command-line front end.

Subcommands: bin, simulate, fit, acf, bootstrap, mc-study, summarize, gof, schema.
Exit status is 0 on success, 1 on a usage error and 2 when the model, the data or a
fit is rejected.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pandas.errors import EmptyDataError, ParserError
from pydantic import ValidationError

from mivt.enums import SeedFamily, TrawlFamily, parse_trawl_family
from mivt.exceptions import DomainError, MivtError
from mivt.models import BootstrapOptions, FitOptions, SimConfig
from mivt.models.sim_config import DEFAULT_BURNIN_EPS, DEFAULT_EPS_CUT
from mivt.repositories import CsvCountSeriesRepository, CsvEventRepository
from mivt.service import SCHEMAS, MivtService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MODEL = 2


class MivtArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _trawl_families(value: str) -> List[TrawlFamily]:
    try:
        return [parse_trawl_family(part) for part in value.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"unknown trawl family in {value!r}") from exc


def _burnin(value: str) -> Optional[float]:
    if value == "auto":
        return None
    try:
        return float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"burn-in must be a number or 'auto', got {value!r}") from exc


def _component(value: str) -> int | str:
    return int(value) if value.isdigit() else value


def _seed(value: str) -> int:
    seed = int(value)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = MivtArgumentParser(prog="mivt", description="Simulate and fit multivariate integer-valued trawl processes.")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging verbosity")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = commands.add_parser("bin", help="Count event timestamps in half-open bins")
    p.add_argument("--events", required=True, help="Comma-separated CSV files with a 'timestamp' column")
    p.add_argument("--delta", type=float, required=True, help="Bin width in seconds")
    p.add_argument("--start", type=float, required=True, help="Window start in seconds")
    p.add_argument("--end", type=float, required=True, help="Window end in seconds")
    p.add_argument("--labels", help="Comma-separated component labels (default: file stems)")
    p.add_argument("--out", required=True, help="Counts CSV to write")

    p = commands.add_parser("simulate", help="Simulate a model on a grid")
    p.add_argument("--model", required=True, help="Model JSON file")
    p.add_argument("--delta", type=float, required=True, help="Grid step")
    p.add_argument("--horizon", type=float, required=True, help="Horizon T after burn-in")
    p.add_argument("--burnin", type=_burnin, default=None, help="Burn-in duration or 'auto' (default)")
    p.add_argument("--burnin-eps", type=float, default=DEFAULT_BURNIN_EPS, help="Trawl level of the auto burn-in")
    p.add_argument("--eps-cut", type=float, default=DEFAULT_EPS_CUT, help="Jump pruning level, 0 disables")
    p.add_argument("--labels", help="Comma-separated component labels")
    p.add_argument("--seed", type=_seed, required=True, help="Master RNG seed")
    p.add_argument("--out", required=True, help="Counts CSV to write")

    p = commands.add_parser("fit", help="Two-stage moment fit")
    p.add_argument("--counts", required=True, help="Counts CSV")
    p.add_argument("--trawl", type=_trawl_families, required=True, help="Trawl family per component, e.g. exp,exp")
    p.add_argument("--seed-model", type=SeedFamily, default=SeedFamily.NB_COMMON,
                   choices=list(SeedFamily), help="Seed family")
    p.add_argument("--lags", type=int, default=30, help="ACF lags matched in the trawl stage")
    p.add_argument("--starts", type=int, default=5, help="Simplex starting points")
    p.add_argument("--out", required=True, help="FitReport JSON to write")

    p = commands.add_parser("acf", help="Export the empirical (and fitted) ACF")
    p.add_argument("--counts", required=True, help="Counts CSV")
    p.add_argument("--component", type=_component, default=0, help="Component label or index")
    p.add_argument("--lags", type=int, default=30, help="Largest lag in bins")
    p.add_argument("--fit", help="FitReport JSON; adds the fitted ACF column")
    p.add_argument("--out", required=True, help="CSV with columns lag,r[,r_fitted]")

    p = commands.add_parser("bootstrap", help="Parametric bootstrap intervals for a fit")
    p.add_argument("--fit", required=True, help="FitReport JSON")
    p.add_argument("--reps", type=int, default=500, help="Replicates (at least 50)")
    p.add_argument("--level", type=float, default=0.95, help="Interval coverage")
    p.add_argument("--jobs", type=int, default=1, help="Parallel workers, -1 for all cores")
    p.add_argument("--seed", type=_seed, required=True, help="Master RNG seed")
    p.add_argument("--out", required=True, help="FitReport JSON with intervals")

    p = commands.add_parser("mc-study", help="Monte Carlo study of the estimator")
    p.add_argument("--model", required=True, help="True model JSON")
    p.add_argument("--reps", type=int, required=True, help="Replicates")
    p.add_argument("--n-obs", type=int, required=True, help="Observations per path")
    p.add_argument("--delta", type=float, default=1.0, help="Grid step")
    p.add_argument("--lags", type=int, default=30, help="ACF lags matched in the trawl stage")
    p.add_argument("--jobs", type=int, default=1, help="Parallel workers, -1 for all cores")
    p.add_argument("--seed", type=_seed, required=True, help="Master RNG seed")
    p.add_argument("--out", required=True, help="CSV of per-replicate estimates")
    p.add_argument("--summary-out", help="CSV of the per-parameter summary")

    p = commands.add_parser("summarize", help="Descriptive statistics of a count series")
    p.add_argument("--counts", required=True, help="Counts CSV")
    p.add_argument("--out", help="JSON file (default: stdout)")

    p = commands.add_parser("gof", help="Goodness of fit of a fitted marginal law")
    p.add_argument("--counts", required=True, help="Counts CSV")
    p.add_argument("--fit", required=True, help="FitReport JSON")
    p.add_argument("--component", type=_component, default=0, help="Component label or index")
    p.add_argument("--out", required=True, help="CSV of pooled observed/expected cells")
    p.add_argument("--quantiles-out", help="CSV of empirical versus fitted quantiles")

    p = commands.add_parser("schema", help="Print the JSON schema of a document type")
    p.add_argument("--name", required=True, choices=sorted(SCHEMAS), help="Document type")
    p.add_argument("--out", help="File to write (default: stdout)")
    return parser


def _split(value: Optional[str]) -> List[str]:
    return [part.strip() for part in value.split(",") if part.strip()] if value else []


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        print(text)


def run(args: argparse.Namespace) -> None:
    fit_options = FitOptions(lags=getattr(args, "lags", 30), n_starts=getattr(args, "starts", 5))
    bootstrap_options = BootstrapOptions(
        reps=getattr(args, "reps", 500), level=getattr(args, "level", 0.95), n_jobs=getattr(args, "jobs", 1)
    )
    service = MivtService(fit_options, bootstrap_options)

    if args.command == "bin":
        files = _split(args.events)
        labels = _split(args.labels) or [None] * len(files)
        if len(labels) != len(files):
            raise DomainError(f"{len(labels)} labels for {len(files)} event files")
        sources = [CsvEventRepository(path, label) for path, label in zip(files, labels)]
        service.bin(sources, args.delta, args.start, args.end, CsvCountSeriesRepository(args.out))
    elif args.command == "simulate":
        cfg = SimConfig(delta=args.delta, horizon=args.horizon, burnin=args.burnin,
                        burnin_eps=args.burnin_eps, eps_cut=args.eps_cut, seed=args.seed)
        service.simulate(service.load_model(args.model), cfg, CsvCountSeriesRepository(args.out),
                         _split(args.labels) or None)
    elif args.command == "fit":
        report = service.fit(CsvCountSeriesRepository(args.counts), args.trawl, args.seed_model)
        _emit(report.model_dump_json(indent=2), args.out)
    elif args.command == "acf":
        report = service.load_report(args.fit) if args.fit else None
        table = service.acf_table(CsvCountSeriesRepository(args.counts), args.component, args.lags, report)
        table.to_csv(args.out, index=False)
    elif args.command == "bootstrap":
        report = service.bootstrap(service.load_report(args.fit), args.seed)
        _emit(report.model_dump_json(indent=2), args.out)
    elif args.command == "mc-study":
        result = service.mc_study(service.load_model(args.model), args.reps, args.n_obs, args.delta, args.seed)
        result.estimates.to_csv(args.out, index=False)
        if args.summary_out:
            result.summary.to_csv(args.summary_out, index=False)
    elif args.command == "summarize":
        summary = service.summarize(CsvCountSeriesRepository(args.counts))
        _emit(summary.model_dump_json(indent=2), args.out)
    elif args.command == "gof":
        result = service.goodness_of_fit(CsvCountSeriesRepository(args.counts), service.load_report(args.fit),
                                         args.component)
        result.to_frame().to_csv(args.out, index=False)
        if args.quantiles_out:
            result.quantile_frame().to_csv(args.quantiles_out, index=False)
        print(json.dumps({"label": result.label, "chi_square": result.chi_square,
                          "dof": result.dof, "p_value": result.p_value}))
    elif args.command == "schema":
        _emit(json.dumps(service.schemas()[args.name], indent=2), args.out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.getLogger("joblib").setLevel(logging.WARNING)
    try:
        run(args)
    except (MivtError, ValidationError) as exc:
        print(f"mivt: error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except (OSError, EmptyDataError, ParserError) as exc:
        print(f"mivt: error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_MODEL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
