"""Utility functions for chorbifold."""

import math
import threading
from collections import OrderedDict
from typing import Any, Callable, Dict, Generic, Hashable, Optional, TypeVar

import numpy as np

from .config import CACHE_MAX_SIZE, LINEAR_LOG10_CUTOFF
from .exceptions import InvalidParameterError

T = TypeVar('T')


class ResultCache(Generic[T]):
    """
    Thread-safe memo cache for expensive, deterministic computations.

    Features:
    - Thread-safe operations
    - Maximum size limit with LRU eviction
    - Cache statistics (hits, misses)

    Values stored here are treated as immutable; callers must not mutate
    arrays they receive (they are returned read-only where possible).

    Example:
        >>> cache = ResultCache(max_size=16)
        >>> cache.set(('structure', 2), constants)
        >>> cache.get(('structure', 2))
        >>> cache.clear()
    """

    def __init__(self, max_size: int = CACHE_MAX_SIZE):
        """
        Initialize cache.

        Args:
            max_size: Maximum number of items to cache
        """
        self._cache: 'OrderedDict[Hashable, T]' = OrderedDict()
        self._max_size = max_size
        self._lock = threading.RLock()
        self._hits = 0
        self._misses = 0

    def get(self, key: Hashable) -> Optional[T]:
        """
        Get value from cache if present.

        Args:
            key: Cache key

        Returns:
            Cached value or None if not found
        """
        with self._lock:
            if key in self._cache:
                self._cache.move_to_end(key)
                self._hits += 1
                return self._cache[key]
            self._misses += 1
            return None

    def set(self, key: Hashable, value: T) -> None:
        """
        Store a value, evicting the least recently used entry when full.

        Args:
            key: Cache key
            value: Value to cache
        """
        with self._lock:
            if key in self._cache:
                self._cache.move_to_end(key)
            elif len(self._cache) >= self._max_size:
                self._cache.popitem(last=False)
            self._cache[key] = value

    def get_or_compute(self, key: Hashable, compute: Callable[[], T]) -> T:
        """Return the cached value for key, computing and storing it on a miss."""
        cached = self.get(key)
        if cached is not None:
            return cached
        value = compute()
        self.set(key, value)
        return value

    def clear(self) -> None:
        """Clear all cached data."""
        with self._lock:
            self._cache.clear()
            self._hits = 0
            self._misses = 0

    def stats(self) -> Dict[str, Any]:
        """
        Get cache statistics.

        Returns:
            Dict with hits, misses, size, max_size, hit_rate
        """
        with self._lock:
            total = self._hits + self._misses
            hit_rate = (self._hits / total * 100) if total > 0 else 0.0
            return {
                'hits': self._hits,
                'misses': self._misses,
                'size': len(self._cache),
                'max_size': self._max_size,
                'hit_rate': f"{hit_rate:.1f}%"
            }


# Global cache for structure constants, frames and connections
_result_cache: ResultCache = ResultCache(max_size=CACHE_MAX_SIZE)


def get_cache() -> ResultCache:
    """Get the global result cache instance."""
    return _result_cache


def clear_cache() -> None:
    """Clear the global result cache."""
    _result_cache.clear()


def get_cache_stats() -> Dict[str, Any]:
    """Get statistics for the global result cache."""
    return _result_cache.stats()


def freeze(array: np.ndarray) -> np.ndarray:
    """Mark an array read-only and return it."""
    array.setflags(write=False)
    return array


def validate_seed(seed: int) -> int:
    """Validate a PRNG seed (non-negative integer)."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
        raise InvalidParameterError(
            f"Invalid seed: {seed!r}. Seeds must be non-negative integers."
        )
    return int(seed)


def make_rng(seed: int) -> np.random.Generator:
    """Create a seeded numpy Generator."""
    return np.random.default_rng(validate_seed(seed))


def derive_seed(seed: int, *labels: int) -> int:
    """Derive a deterministic child seed from a parent seed and integer labels.

    Used to give independent sweeps (per n, per check) their own streams.
    """
    sequence = np.random.SeedSequence([validate_seed(seed), *labels])
    return int(sequence.generate_state(1)[0])


def render_decimal(log10_value: float, digits: int = 6) -> str:
    """
    Render a positive number given by its base-10 logarithm.

    Values with |log10| below the cutoff are rendered as ordinary floats
    with ``digits`` significant digits; anything larger is built from the
    logarithm so it never overflows or underflows.

    Examples:
        >>> render_decimal(-8.5349, 4)
        '2.918e-09'
        >>> render_decimal(-1234.5, 3)
        '3.16e-1235'
    """
    if not math.isfinite(log10_value):
        raise InvalidParameterError(f"Cannot render non-finite log10 value {log10_value}")
    if abs(log10_value) < LINEAR_LOG10_CUTOFF:
        return f"{10.0 ** log10_value:.{digits}g}"
    exponent = math.floor(log10_value)
    mantissa = 10.0 ** (log10_value - exponent)
    if round(mantissa, digits - 1) >= 10.0:
        mantissa /= 10.0
        exponent += 1
    return f"{mantissa:.{max(digits - 1, 0)}f}e{exponent:+d}".replace('e+', 'e')
