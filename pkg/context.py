from dataclasses import dataclass, field, fields
from pathlib import Path

from lab.shapes import SkewShape
from settings import Settings


@dataclass
class Context:
    """Effective bounds and inputs for one run; CLI flags win over settings."""

    max_cells: int = 6
    series_degree: int = 12
    max_extensions: int = 24
    max_volume: int = 8
    semistandard_volume: int = 10
    eigen_max_cells: int = 5
    bijection_max_cells: int = 5
    chain_max: int = 5
    random_posets: int = 50
    random_poset_size: int = 6
    seed: int = 0
    corpus_dir: Path = Path("corpus")
    eigen_base_points: int = 8
    output_format: str = "json"
    shape: SkewShape | None = None
    poset_paths: list[Path] = field(default_factory=list)
    filter_kind: str = "row"

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "Context":
        names = {f.name for f in fields(cls)}
        values = {k: v for k, v in settings.model_dump().items() if k in names}
        values.update({k: v for k, v in overrides.items() if v is not None})
        unknown = set(values) - names
        if unknown:
            raise TypeError(f"unknown context fields {sorted(unknown)}")
        values["corpus_dir"] = Path(values.get("corpus_dir", "corpus"))
        values["poset_paths"] = [Path(p) for p in values.get("poset_paths", [])]
        return cls(**values)
