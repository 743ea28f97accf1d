from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Arithmetic limits
MAX_INPUT_BITS = 127
TRIAL_DIVISION_BOUND = 10**5
PRIMALITY_RHO_STEPS = 1 << 18
PRIMALITY_MAX_BASE = 1000
SIEVE_SEGMENT = 1 << 20

# Search limits
TWO_SQUARES_BOUND = 10**14
SEARCH_Z_BUDGET = 10**7
SEARCH_CHUNK = 2048

# Local solvability limits
LOCAL_LEVEL_CAP = 24
LOCAL_NODE_BUDGET = 500_000
DEFAULT_GENERIC_BOUND = 100

# Density limits
LANDAU_LIMIT = 10**8


class Settings(BaseSettings):
    # Runtime Settings
    THREADS: int = Field(default=1, ge=1)

    # Output Settings
    OUTPUT_BUFFER: int = Field(default=65536, ge=1)

    model_config = SettingsConfigDict(env_prefix="SQPOW_", case_sensitive=True)


settings = Settings()
