"""Run-time configuration.

Every field can be set from the environment with the ``PEDESTAL_LAB_`` prefix
or from a ``.env`` file in the working directory; nothing is required.
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="PEDESTAL_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_cells: int = Field(6, ge=0)
    series_degree: int = Field(12, ge=0)
    max_extensions: int = Field(24, ge=1)
    max_volume: int = Field(8, ge=0)
    semistandard_volume: int = Field(10, ge=0)
    eigen_max_cells: int = Field(5, ge=0)
    bijection_max_cells: int = Field(5, ge=0)
    chain_max: int = Field(5, ge=0)
    random_posets: int = Field(50, ge=0)
    random_poset_size: int = Field(6, ge=1)
    seed: int = 0
    corpus_dir: str = "corpus"
    eigen_base_points: int = Field(8, ge=1)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    output_format: Literal["json", "text"] = "json"


def get_settings(**values) -> Settings:
    return Settings(**values)
