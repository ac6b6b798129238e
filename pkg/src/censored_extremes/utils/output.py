"""
Result emission: CSV or JSON with a metadata header

CSV files start with '# censex-metadata: {json}' and, outside comparison mode,
a '# generated_at: ...' line, then the header row and the data rows. Floats
are written with 17 significant digits.
"""

import csv
import io
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

METADATA_PREFIX = "# censex-metadata: "
TIMESTAMP_PREFIX = "# generated_at: "


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return format(value, ".17g")
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        return None if math.isnan(value) else ("inf" if value > 0 else "-inf")
    return value


def render_table(
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    metadata: Dict[str, Any],
    fmt: str = "csv",
    comparison: bool = False,
    extra: Optional[Dict[str, Any]] = None,
) -> str:
    """Render rows plus metadata; comparison mode leaves out the timestamp"""
    generated_at = None if comparison else datetime.now(timezone.utc).isoformat()

    if fmt == "json":
        document = {"metadata": metadata}
        if generated_at is not None:
            document["generated_at"] = generated_at
        if extra:
            document.update(extra)
        document["columns"] = list(columns)
        document["rows"] = [[_json_value(v) for v in row] for row in rows]
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"

    buffer = io.StringIO()
    buffer.write(METADATA_PREFIX + json.dumps(metadata, sort_keys=True) + "\n")
    if generated_at is not None:
        buffer.write(TIMESTAMP_PREFIX + generated_at + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def write_table(
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    metadata: Dict[str, Any],
    out: Optional[Union[str, Path]] = None,
    fmt: str = "csv",
    comparison: bool = False,
    extra: Optional[Dict[str, Any]] = None,
) -> None:
    """Write to out, or to stdout when out is None"""
    text = render_table(columns, rows, metadata, fmt, comparison, extra)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def read_metadata(path: Union[str, Path]) -> Dict[str, Any]:
    """Metadata block of an emitted CSV or JSON file"""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return json.loads(text)["metadata"]
    for line in text.splitlines():
        if line.startswith(METADATA_PREFIX):
            return json.loads(line[len(METADATA_PREFIX) :])
    raise ValueError(f"{path}: no metadata header")


def data_lines(text: str) -> List[str]:
    """Lines of a rendered CSV without the comment header"""
    return [line for line in text.splitlines() if not line.startswith("#")]
