"""Search guards, overridable through environment variables."""

import os
from dataclasses import dataclass


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Guards:
    max_maps: int = 10**7          # target.n ** source.n for hom enumeration
    max_tables: int = 10**8        # candidate tables in algebra search
    max_algebra_size: int = 5      # enumerate_algebras default bound
    max_filter_scan: int = 16      # carrier size for the 2**n filter scan
    max_closure: int = 10**6       # elements of L(H)
    max_unary_maps: int = 10**6    # n ** n for operator scans
    sample_size: int = 1000        # upsets sampled per property past the guard
    seed: int = 20190501


def guards():
    """Current guards, read fresh from the environment on every call."""
    return Guards(
        max_maps=_env_int("HILBEXT_MAX_MAPS", Guards.max_maps),
        max_tables=_env_int("HILBEXT_MAX_TABLES", Guards.max_tables),
        max_algebra_size=_env_int("HILBEXT_MAX_SIZE", Guards.max_algebra_size),
        max_filter_scan=_env_int("HILBEXT_MAX_FILTER_SCAN", Guards.max_filter_scan),
        max_closure=_env_int("HILBEXT_MAX_CLOSURE", Guards.max_closure),
        max_unary_maps=_env_int("HILBEXT_MAX_UNARY_MAPS", Guards.max_unary_maps),
        sample_size=_env_int("HILBEXT_SAMPLE_SIZE", Guards.sample_size),
        seed=_env_int("HILBEXT_SEED", Guards.seed),
    )
