from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import allure

from configs.configs import Configs
from core.utils.csv import CsvUtils


@dataclass
class CsvTable:
    """Rows of one command's output plus the provenance written above them."""

    command: str
    header: Sequence[str]
    rows: list[Sequence[Any]] = field(default_factory=list)
    seed: Optional[int] = None

    def render(self) -> str:
        return CsvUtils.render(self.header, self.rows, self.seed, Configs().VERSION, self.command)

    def column(self, name: str) -> list[Any]:
        index = list(self.header).index(name)
        return [row[index] for row in self.rows]


class BaseController:
    def attach_table(self, table: CsvTable) -> CsvTable:
        allure.attach(table.render(), name=f"{table.command}.csv", attachment_type=allure.attachment_type.CSV)
        return table
