"""Runtime configuration for the k-cactus toolkit."""

import os
from typing import Optional


class Config:
    """Configuration values, overridable through the environment."""

    # Path-count oracle refuses graphs above this order
    CYCLE_CAP: int = int(os.environ.get('KCACTUS_CYCLE_CAP', '16'))

    CANONICAL_CAP: int = 10
    ENUMERATION_CAP: int = 8

    # strict | relaxed
    THETA_PRIME_ENDPOINTS: str = os.environ.get('KCACTUS_THETA_PRIME_ENDPOINTS', 'relaxed')

    # Sweeps only need to know whether the cactus number is <= k
    CENSUS_CEILING: int = 6

    LOG_DIR: str = os.environ.get('KCACTUS_LOG_DIR', 'logs')
    DATABASE_URL: Optional[str] = os.environ.get('KCACTUS_DATABASE_URL', 'sqlite:///kcactus_runs.db')
