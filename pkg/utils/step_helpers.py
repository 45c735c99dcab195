"""
Helpers shared by the behave step definitions.

Parsing of the compact notations used in feature files, an independent
trial-division primality oracle, and an in-process CLI runner.
"""

import io
import logging
import re
from contextlib import redirect_stderr, redirect_stdout
from typing import Any, Callable, List, Optional, Set, Tuple

logger = logging.getLogger(__name__)

_TUPLE = re.compile(r"\(([^()]*)\)")


def parse_tuples(text: str) -> Set[Tuple[int, ...]]:
    """
    Parse "(1,0,2), (4,1,23)" into a set of int tuples; "none" is empty.
    """
    text = text.strip()
    if text.lower() in ("none", "{}", ""):
        return set()
    found = {
        tuple(int(v) for v in group.split(","))
        for group in _TUPLE.findall(text)
    }
    if not found:
        raise ValueError(f"Could not parse tuple list: {text!r}")
    return found


def parse_ints(text: str) -> List[int]:
    """Parse "5, 29, 53" into [5, 29, 53]; "none" is empty."""
    text = text.strip().strip("{}")
    if text.lower() in ("none", ""):
        return []
    return [int(v) for v in text.split(",")]


def parse_optional_int(text: str) -> Optional[int]:
    text = text.strip()
    return None if text.lower() in ("none", "absent", "-") else int(text)


def trial_division_is_prime(n: int) -> bool:
    """Primality by trial division; the oracle for small n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def trial_factorization(n: int) -> List[int]:
    """Prime factors of n with multiplicity."""
    factors = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def capture(context, fn: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
    """
    Call fn and record the outcome on the context.

    Sets context.result on success and context.error when fn raises
    ValueError or AssertionError, so Then steps can check either.
    """
    context.result, context.error = None, None
    try:
        context.result = fn(*args, **kwargs)
    except (ValueError, AssertionError) as e:
        context.error = e
    context.artifacts.append(
        f"{getattr(fn, '__name__', fn)}{args} -> result={context.result!r} error={context.error!r}"
    )
    return context.result


def run_cli(argv: List[str]) -> Tuple[int, str, str]:
    """
    Run the CLI in-process.

    Returns:
        (exit status, captured stdout, captured stderr)
    """
    from cli import main

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(argv)
    logger.debug(f"CLI {argv} exited with {status}")
    return status, out.getvalue(), err.getvalue()


__all__ = [
    "parse_tuples",
    "parse_ints",
    "parse_optional_int",
    "trial_division_is_prime",
    "trial_factorization",
    "capture",
    "run_cli",
]
