"""
engelgroups utilities for writing reports
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import pandas as pd
from typing_extensions import Literal

from .log import _init_logger
from .prov import ProcessType, engelgroups_prov_attrs

ReportFormat = Literal["jsonl", "csv"]
SUPPORTED_FORMATS = {
    "jsonl": {"ext": ".jsonl"},
    "csv": {"ext": ".csv"},
}

# list-valued record fields are summarized by their length in CSV tables
_CSV_COUNTED = ("violations", "notes")

logger = _init_logger(__name__)


def report_header(config: Dict[str, Any], process_type: ProcessType) -> Dict[str, Any]:
    """The provenance line that opens every JSONL report."""
    return {"config": config, "provenance": engelgroups_prov_attrs(process_type)}


def _dumps(record: Dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def format_jsonl(
    records: Iterable[Dict[str, Any]], config: Dict[str, Any], process_type: ProcessType
) -> str:
    lines = [_dumps(report_header(config, process_type))]
    lines.extend(_dumps(record) for record in records)
    return "\n".join(lines) + "\n"


def records_to_dataframe(records: Iterable[Dict[str, Any]]) -> pd.DataFrame:
    """One row per record; violation and note lists become counts."""
    rows = []
    for record in records:
        row = dict(record)
        for key in _CSV_COUNTED:
            if isinstance(row.get(key), list):
                row[key] = len(row[key])
        rows.append({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
    return pd.DataFrame(rows)


def format_csv(records: Iterable[Dict[str, Any]]) -> str:
    return records_to_dataframe(records).to_csv(index=False, lineterminator="\n")


def write_report(
    records: List[Dict[str, Any]],
    config: Dict[str, Any],
    path: Optional[Union[str, Path]] = None,
    fmt: ReportFormat = "jsonl",
    process_type: ProcessType = "verification",
) -> None:
    """
    Write report records to ``path``, or to stdout when no path is given.

    Parameters
    ----------
    records : list of dict
        Records already sorted by case key
    config : dict
        Run configuration, written to the JSONL header line
    path : str or Path, optional
        Output file
    fmt : {"jsonl", "csv"}
        Output format; CSV tables carry no header line
    process_type : ProcessType
        Provenance tag of the run
    """
    if fmt not in SUPPORTED_FORMATS:
        raise ValueError(f"{fmt} is not a supported report format")
    text = format_jsonl(records, config, process_type) if fmt == "jsonl" else format_csv(records)
    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    if path.suffix != SUPPORTED_FORMATS[fmt]["ext"]:
        logger.warning(f"report {path} does not end in {SUPPORTED_FORMATS[fmt]['ext']}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"wrote {len(records)} record(s) to {path}")
