import csv
import io
import sys
from typing import Any, Iterable, Optional, Sequence

from constants.numerics import CSV_DIGITS
from core.utils.file import FileUtils


class CsvUtils:
    @staticmethod
    def format_value(value: Any) -> str:
        """Floats with 17 significant digits; everything else via str()."""
        if isinstance(value, bool):
            return str(value).lower()
        if isinstance(value, float):
            return format(value, f".{CSV_DIGITS}g")
        return str(value)

    @staticmethod
    def complex_columns(value: complex) -> list[float]:
        value = complex(value)
        return [value.real, value.imag]

    @staticmethod
    def render(
        header: Sequence[str],
        rows: Iterable[Sequence[Any]],
        seed: Optional[int],
        version: str,
        command: str,
    ) -> str:
        """Comment line with provenance, header row, then the data rows."""
        buffer = io.StringIO()
        buffer.write(f"# seed={'none' if seed is None else seed} version={version} command={command}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([CsvUtils.format_value(value) for value in row])
        return buffer.getvalue()

    @staticmethod
    def write(text: str, file_path: Optional[str] = None) -> None:
        """Write to file_path, or to stdout when it is None or '-'."""
        if file_path is None or file_path == "-":
            sys.stdout.write(text)
            return
        path = FileUtils.ensure_parent_dir(file_path)
        with path.open("w", encoding="utf-8", newline="") as f:
            f.write(text)
