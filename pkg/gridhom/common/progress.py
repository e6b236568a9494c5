from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import TypeVar

T = TypeVar("T")


def progress(
    iterable: Iterable[T], enabled: bool, total: int | None = None, desc: str = ""
) -> Iterator[T]:
    """Wrap ``iterable`` in a tqdm bar when enabled and tqdm is importable."""
    if enabled:
        try:
            from tqdm import tqdm
        except ImportError:
            print("Note: tqdm not available, progress bar disabled")
        else:
            yield from tqdm(iterable, total=total, desc=desc, leave=False)
            return
    yield from iterable
