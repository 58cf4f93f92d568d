"""Run the full analysis described by an AnalysisConfig."""

from __future__ import annotations

from .behavioral import CommitLog, parse_commit_log, temporal_coupling, hotspots
from .config import AnalysisConfig, ConfigError
from .frontend import CodebaseMetrics, analyze_tree
from .models import (
    BenchmarkError,
    ModelResult,
    aip_model,
    bch_model,
    climate_td,
    codescene_model,
    kiuwan_td,
    load_benchmark,
    ndepend_td,
    sonar_td,
    squore_td,
    vsmi_model,
)
from .report import ComparisonReport, build_report
from .rules import Violation, catalog_index, evaluate, skipped_checks


def run_models(
    config: AnalysisConfig,
    metrics: CodebaseMetrics,
    violations: list[Violation],
    log: CommitLog | None = None,
    benchmark: dict[str, list[float]] | None = None,
) -> list[ModelResult]:
    catalog = catalog_index(config.catalog)
    paths = [f.path for f in metrics.files]
    file_loc = {f.path: f.loc for f in metrics.files}
    file_lloc = {f.path: f.lloc for f in metrics.files}
    results = []
    for model in config.enabled_models:
        if model == "aip":
            results.append(aip_model(metrics, violations, catalog, config.aip))
        elif model == "climate":
            results.append(climate_td(violations, catalog, metrics.total_loc, config.climate,
                                      file_loc))
        elif model == "kiuwan":
            results.append(kiuwan_td(violations, catalog, config.efforts, paths))
        elif model == "ndepend":
            results.append(ndepend_td(violations, catalog, metrics.total_lloc, config.ndepend,
                                      config.efforts, file_lloc))
        elif model == "sonar":
            results.append(sonar_td(violations, catalog, metrics.total_loc, config.efforts,
                                    config.sonar, file_loc))
        elif model == "squore":
            results.append(squore_td(violations, catalog, config.efforts, config.squore, paths))
        elif model == "vsmi":
            results.append(vsmi_model(metrics))
        elif model == "bch":
            results.append(bch_model(metrics, violations, config.bch, benchmark))
        elif model == "codescene":
            if log is None:
                raise ConfigError("model 'codescene' needs a commit log (--commit-log)")
            results.append(codescene_model(log, metrics, config.codescene))
    return results


def analyze(config: AnalysisConfig) -> ComparisonReport:
    """Analyze ``config.source_root`` and compare every enabled model.

    Raises ConfigError for configuration problems (missing commit log for
    codescene, unreadable benchmark or commit log) and AnalysisError when the
    source tree cannot be analyzed.
    """
    if config.source_root is None:
        raise ConfigError("no source root given")
    if "codescene" in config.enabled_models and config.commit_log is None:
        raise ConfigError("model 'codescene' needs a commit log (--commit-log)")

    log = None
    if config.commit_log is not None:
        try:
            log = parse_commit_log(config.commit_log)
        except OSError as exc:
            raise ConfigError(f"cannot read commit log {config.commit_log!r}: "
                              f"{exc.strerror}") from None
        except ValueError as exc:
            raise ConfigError(f"{config.commit_log}: {exc}") from None

    notes: list[str] = []
    benchmark = None
    if config.benchmark is not None and "bch" in config.enabled_models:
        try:
            benchmark = load_benchmark(config.benchmark)
        except (OSError, BenchmarkError) as exc:
            notes.append(f"bch benchmark unusable, stars omitted: {exc}")

    metrics, tree_notes = analyze_tree(
        config.source_root,
        minisrc_extensions=config.minisrc_extensions,
        indent_width=config.indent_width,
        identical_window=config.identical_window,
        similar_window=config.similar_window,
    )
    notes.extend(tree_notes)
    catalog = config.catalog
    violations = evaluate(metrics, catalog)
    for skip in skipped_checks(metrics, catalog):
        notes.append(f"{skip.path}: {skip.rule_id} not checked ({skip.reason})")

    results = run_models(config, metrics, violations, log, benchmark)
    spots, couplings = [], []
    if log is not None:
        params = config.codescene
        spots = hotspots(log, metrics, params.top_n, params.complexity)
        couplings = temporal_coupling(log, params.min_shared, params.max_files_per_commit)
    return build_report(results, violations, spots, couplings, config.provenance(), notes)
