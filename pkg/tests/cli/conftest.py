import csv
import io

import pytest

from cli.main import main


class CliRun:
    def __init__(self, code: int, out: str, err: str):
        self.code = code
        self.out = out
        self.err = err

    @property
    def comment(self) -> str:
        return self.out.splitlines()[0]

    @property
    def header(self) -> list[str]:
        return next(csv.reader(io.StringIO(self.out.splitlines()[1])))

    @property
    def rows(self) -> list[dict[str, str]]:
        body = "\n".join(self.out.splitlines()[1:])
        return list(csv.DictReader(io.StringIO(body)))


@pytest.fixture
def run_cli(capsys):
    """Run the command line in-process and capture its streams."""

    def run(*argv: str) -> CliRun:
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliRun(code, captured.out, captured.err)

    return run
