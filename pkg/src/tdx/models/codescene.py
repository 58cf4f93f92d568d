from __future__ import annotations

from dataclasses import asdict

from ..behavioral import CommitLog, excluded_paths, hotspots, temporal_coupling
from ..frontend import CodebaseMetrics
from .params import CodesceneParams
from .result import ModelResult


def codescene_model(
    log: CommitLog, metrics: CodebaseMetrics, params: CodesceneParams = CodesceneParams()
) -> ModelResult:
    """Hotspots and temporal coupling; no single debt figure is produced."""
    ranked = hotspots(log, metrics, top_n=max(1, len(metrics.files)), complexity=params.complexity)
    couplings = temporal_coupling(log, params.min_shared, params.max_files_per_commit)
    result = ModelResult(
        model_id="codescene",
        intermediates={
            "complexity_axis": params.complexity,
            "commits": len(log.commits),
            "hotspots": [asdict(h) for h in ranked[:params.top_n]],
            "couplings": [asdict(c) for c in couplings],
        },
        per_file={h.path: float(h.score) for h in sorted(ranked, key=lambda h: h.path)},
    )
    missing = excluded_paths(log, metrics)
    if missing:
        result.notes.append(f"{len(missing)} path(s) in the commit log are not in the analyzed "
                            f"tree and were skipped: {', '.join(missing)}")
    return result
