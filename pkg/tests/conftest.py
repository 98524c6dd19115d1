"""Shared fixtures: cached brute-force scans, reused across test modules."""

from collections import Counter

import pytest

from gf2roots.gf2 import Gf2Matrix, _gram_rows
from gf2roots.rootsets import RootFamily, brute_force_enumerate, iter_upper_triangular


class OracleCache:
    """Memoized brute-force enumerations keyed by (n, family)."""

    def __init__(self) -> None:
        self._entries: dict[tuple[int, RootFamily], list] = {}

    def entries(self, n: int, family: RootFamily) -> list:
        key = (n, family)
        if key not in self._entries:
            self._entries[key] = list(brute_force_enumerate(n, family, budget=7))
        return self._entries[key]

    def matrices(self, n: int, family: RootFamily) -> set[Gf2Matrix]:
        return {e.matrix for e in self.entries(n, family)}

    def rank_counts(self, n: int, family: RootFamily) -> Counter:
        return Counter(e.rank for e in self.entries(n, family))


@pytest.fixture(scope="session")
def oracle():
    return OracleCache()


class GramRootMaps:
    """For each n, a map from Gram matrix rows to the list of its roots."""

    def __init__(self) -> None:
        self._maps: dict[int, dict[tuple[int, ...], list[tuple[int, ...]]]] = {}

    def roots_by_gram(self, n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
        if n not in self._maps:
            table: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
            for rows in iter_upper_triangular(n):
                table.setdefault(tuple(_gram_rows(rows, n)), []).append(rows)
            self._maps[n] = table
        return self._maps[n]


@pytest.fixture(scope="session")
def gram_roots():
    return GramRootMaps()
