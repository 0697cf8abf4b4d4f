"""
Streaming census runs: workers per v, rows written as JSONL or CSV.
"""

import json
import logging
import time
from datetime import datetime
from pathlib import Path
from typing import Callable, IO, Iterable, List, Optional

import pandas as pd

from ..algebra.gf2n import FieldDesc, parse_field
from .census import enumerate_genus
from .errors import CensusIOError, MalformedInputError
from .models import CurveRecord, OutputFormat, RunConfig, VStats

logger = logging.getLogger(__name__)

ROW_FIELDS = ["genus", "n", "q", "field_poly", "v", "u", "counts", "weil", "two_rank"]


class CensusStreamer:
    """Runs one census and streams its rows to a file or stdout."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.field: FieldDesc = parse_field(config.n, config.field_poly)
        self.stats: List[VStats] = []
        self.elapsed: Optional[float] = None

    def run(self, progress: Optional[Callable[[VStats], None]] = None) -> List[CurveRecord]:
        cfg = self.config
        cfg.require_enumerable()
        start = time.time()

        def on_v(stats: VStats) -> None:
            self.stats.append(stats)
            if progress:
                progress(stats)

        records = enumerate_genus(cfg.genus, self.field, jobs=cfg.resolved_jobs(),
                                  with_counts=cfg.with_counts, progress=on_v)
        self.elapsed = time.time() - start
        logger.info("census g=%d n=%d: %d classes in %.2fs",
                    cfg.genus, cfg.n, len(records), self.elapsed)
        return records

    def write(self, records: Iterable[CurveRecord], stream: Optional[IO[str]] = None) -> None:
        """Write rows to config.output, or to stream when no output path is set."""
        fmt = OutputFormat(self.config.format)
        if self.config.output:
            path = Path(self.config.output)
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                with open(path, "w", newline="") as handle:
                    write_records(records, handle, fmt)
                self._write_metadata(path)
            except OSError as e:
                raise CensusIOError(f"cannot write {path}: {e}") from e
        else:
            write_records(records, stream, fmt)

    def _write_metadata(self, path: Path) -> None:
        meta = {
            "generated_at": datetime.now().isoformat(),
            "config": self.config.model_dump(),
            "field_poly": self.field.modulus,
            "classes": sum(s.classes for s in self.stats),
            "v_choices": len(self.stats),
            "elapsed_seconds": self.elapsed,
            "per_v": [s.__dict__ for s in self.stats],
        }
        with open(path.with_suffix(path.suffix + ".meta.json"), "w") as f:
            json.dump(meta, f, indent=2, default=str)


def write_records(records: Iterable[CurveRecord], handle: IO[str], fmt: OutputFormat) -> None:
    if fmt is OutputFormat.jsonl:
        for r in records:
            handle.write(json.dumps(r.to_row()) + "\n")
        return
    rows = []
    for r in records:
        row = r.to_row()
        for key in ("v", "u", "counts", "weil"):
            row[key] = "" if row[key] is None else ",".join(str(x) for x in row[key])
        rows.append(row)
    pd.DataFrame(rows, columns=ROW_FIELDS).to_csv(handle, index=False)


def read_rows(path: str) -> List[dict]:
    """Raw rows of a JSONL or CSV census file."""
    p = Path(path)
    try:
        if p.suffix == ".csv":
            frame = pd.read_csv(p, dtype=str, keep_default_na=False)
            return frame.to_dict(orient="records")
        rows = []
        with open(p) as f:
            for line_num, line in enumerate(f, 1):
                if not line.strip():
                    continue
                try:
                    rows.append(json.loads(line))
                except json.JSONDecodeError as e:
                    raise MalformedInputError(f"{p}:{line_num}: invalid JSON: {e}") from None
        return rows
    except OSError as e:
        raise CensusIOError(f"cannot read {p}: {e}") from e


def read_census(path: str) -> List[CurveRecord]:
    return [CurveRecord.from_row(row) for row in read_rows(path)]
