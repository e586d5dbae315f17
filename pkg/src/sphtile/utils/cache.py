"""Memoization for built families and search results."""

import functools
import hashlib
import json
from typing import Any, Callable, Dict

from loguru import logger


class ResultCache:
    """In-process cache keyed by a digest of the call arguments."""

    def __init__(self):
        self._cache: Dict[str, Any] = {}

    def get(self, key: str) -> Any:
        return self._cache.get(key)

    def __contains__(self, key: str) -> bool:
        return key in self._cache

    def set(self, key: str, value: Any) -> None:
        self._cache[key] = value

    def clear(self) -> None:
        self._cache.clear()
        logger.debug("Cleared result cache")

    def __len__(self) -> int:
        return len(self._cache)


def cache_key(name: str, args: tuple, kwargs: dict) -> str:
    key_data = {"func": name, "args": args, "kwargs": kwargs}
    key_string = json.dumps(key_data, sort_keys=True, default=str)
    return hashlib.md5(key_string.encode()).hexdigest()


def cached_result(func: Callable) -> Callable:
    """Cache a pure function's results for the lifetime of the process.

    The wrapped function gains ``cache_clear()``.
    """
    cache = ResultCache()

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        key = cache_key(func.__qualname__, args, kwargs)
        if key in cache:
            logger.debug(f"Cache hit for {func.__name__}")
            return cache.get(key)
        result = func(*args, **kwargs)
        cache.set(key, result)
        logger.debug(f"Cached result for {func.__name__}")
        return result

    wrapper.cache_clear = cache.clear
    return wrapper
