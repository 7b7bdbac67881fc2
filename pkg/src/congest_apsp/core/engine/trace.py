from __future__ import annotations

from typing import TYPE_CHECKING, Self

if TYPE_CHECKING:
    from pathlib import Path
    from types import TracebackType

    from pydantic import BaseModel

    from .models import RoundReport


class JsonlWriter:
    """Append pydantic records to a JSON Lines file, one record per line."""

    def __init__(self, path: Path) -> None:
        self.path = path
        self.records = 0
        self._file = open(path, "w", encoding="utf-8")

    def write(self, record: BaseModel) -> None:
        self._file.write(record.model_dump_json())
        self._file.write("\n")
        self.records += 1

    def close(self) -> None:
        self._file.close()

    def __enter__(self) -> Self:
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        self.close()


class TraceWriter(JsonlWriter):
    """Phase trace: one record per engine phase."""

    def __call__(self, report: RoundReport) -> None:
        for leaf in report.leaves():
            self.write(leaf.trace_record())
