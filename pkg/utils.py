import os
import time
from contextlib import contextmanager
from typing import Iterator, List, Optional

from config import RELATIONS_DIR


class MonoidError(Exception):
    """Base class for every error raised by the monoid toolkit."""
    pass


class DimensionMismatchError(MonoidError, ValueError):
    """Raised when degrees or (n, m) dimensions of two operands disagree."""
    pass


class InvalidElementError(MonoidError, ValueError):
    """Raised when an element is built from data that violates its invariants."""
    pass


class ParseError(MonoidError, ValueError):
    """Raised when text does not follow one of the codec grammars."""

    def __init__(self, message: str, text: Optional[str] = None):
        if text is not None:
            message = f"{message}: {text!r}"
        super().__init__(message)
        self.text = text


class UnboundSymbolError(MonoidError, KeyError):
    """Raised when a word mentions a symbol the alphabet does not bind."""

    def __init__(self, symbol: str):
        super().__init__(symbol)
        self.symbol = symbol

    def __str__(self):
        return f"unbound symbol '{self.symbol}'"


class LimitExceededError(MonoidError):
    """Raised when an enumeration grows past its configured cap."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} limit exceeded ({limit})")
        self.limit = limit


class CarrierMismatchError(MonoidError, ValueError):
    """Raised when congruences over different monoids are compared."""
    pass


class FileUtils:
    @staticmethod
    def get_relation_files(directory: str = RELATIONS_DIR) -> List[str]:
        """Get all presentation files in the relations directory."""
        if not os.path.isdir(directory):
            return []
        return sorted(f for f in os.listdir(directory) if f.endswith('.rels'))

    @staticmethod
    def bundled_relation_path(name: str, directory: str = RELATIONS_DIR) -> Optional[str]:
        """Return the path of a bundled presentation file, or None if absent."""
        path = os.path.join(directory, name)
        return path if os.path.isfile(path) else None


class TimingUtils:
    @staticmethod
    @contextmanager
    def stopwatch() -> Iterator[List[float]]:
        """Yield a one-slot list that holds the elapsed seconds on exit."""
        elapsed = [0.0]
        start = time.perf_counter()
        try:
            yield elapsed
        finally:
            elapsed[0] = time.perf_counter() - start
