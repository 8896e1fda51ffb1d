"""
File helpers for Cayley table files and serialized graphs.
"""
from pathlib import Path
from typing import List, Optional, Union

from ..core.exceptions import CayleyFileError, GraphParseError
from ..core.logging import get_logger
from ..models.graph import SimpleGraph
from .export import parse_graph_json

logger = get_logger(__name__)


def parse_cayley_text(text: str) -> List[List[int]]:
    """
    Parse the Cayley table text format.

    The first meaningful line is n, followed by n rows of n whitespace
    separated 0-based indices. Lines starting with '#' and blank lines
    are ignored. Errors name the line, never its contents.
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise CayleyFileError("Cayley table is empty")
    first, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise CayleyFileError(f"Line {first}: expected the group order")
    if n < 1:
        raise CayleyFileError(f"Line {first}: group order must be positive")
    rows = lines[1:]
    if len(rows) != n:
        raise CayleyFileError(f"Expected {n} table rows, got {len(rows)}")

    table = []
    for number, row in rows:
        try:
            entries = [int(token) for token in row.split()]
        except ValueError:
            raise CayleyFileError(f"Line {number}: non-integer entry")
        if len(entries) != n:
            raise CayleyFileError(f"Line {number}: {len(entries)} entries, expected {n}")
        table.append(entries)
    return table


class FileManager:
    """
    Reads Cayley table and graph files.

    With ``restrict_cayley`` set, Cayley paths are resolved inside
    ``cayley_dir`` and anything outside it is refused; without a directory
    every Cayley path is refused.
    """

    def __init__(self, cayley_dir: Optional[Union[str, Path]] = None, restrict_cayley: bool = False):
        self.cayley_dir = Path(cayley_dir).resolve() if cayley_dir else None
        self.restrict_cayley = restrict_cayley

    def resolve_cayley_path(self, path: Union[str, Path]) -> Path:
        """Path to read for a ``cayley:`` atom, after the directory check."""
        path = Path(path)
        if not self.restrict_cayley:
            return path
        if self.cayley_dir is None:
            raise CayleyFileError("Cayley table files are not accepted here")
        resolved = (self.cayley_dir / path).resolve()
        try:
            resolved.relative_to(self.cayley_dir)
        except ValueError:
            logger.warning("Refused Cayley path outside %s", self.cayley_dir)
            raise CayleyFileError("Cayley table path is outside the allowed directory")
        return resolved

    def load_cayley_table(self, path: Union[str, Path]) -> List[List[int]]:
        path = self.resolve_cayley_path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise CayleyFileError(f"Cannot read Cayley table {path}", details=e.strerror)
        except UnicodeDecodeError:
            raise CayleyFileError(f"Cayley table {path} is not UTF-8 text")
        return parse_cayley_text(text)

    def load_graph_json(self, path: Union[str, Path]) -> SimpleGraph:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise GraphParseError(f"Cannot read graph file {path}", details=e.strerror)
        except UnicodeDecodeError:
            raise GraphParseError(f"Graph file {path} is not UTF-8 text")
        return parse_graph_json(text)
