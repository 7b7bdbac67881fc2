from __future__ import annotations

from functools import wraps
from typing import TYPE_CHECKING, Any

from rich.console import Console
from rich.markup import escape

if TYPE_CHECKING:
    from collections.abc import Callable

console = Console(stderr=True)


def describe_failure(e: Exception) -> str:
    """One-line description; simulator errors also name the phase and round they stopped in."""
    phase = getattr(e, "phase", None)
    round_index = getattr(e, "round_index", None)
    if phase is None or round_index is None:
        return f"{type(e).__name__}: {e}"
    return f"{type(e).__name__} in {phase} at round {round_index}: {e}"


def log_exceptions[T, **P](
    types: type[Exception] | tuple[type[Exception], ...],
) -> Callable[[Callable[P, T]], Callable[P, T]]:
    """Decorator printing matching exceptions to stderr before re-raising them."""

    def decorator(func: Callable[P, T]) -> Callable[P, T]:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            try:
                return func(*args, **kwargs)
            except types as e:
                console.print(f"[red]Error in {func.__name__}:[/red] {escape(describe_failure(e))}", highlight=False)
                raise

        return wrapper

    return decorator
