"""Configuration management for semgraph."""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv


# Base paths (module-level, not config)
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
FIXTURES_DIR = DATA_DIR / "fixtures"

# Load .env once at module import
load_dotenv(PROJECT_ROOT / ".env")


@dataclass
class Config:
    """Application configuration (settings that affect behavior)."""

    # Relevance
    tau: float
    outlier_z: float
    outlier_min_links: int
    prune_separator: str

    # Type statistics
    yr_mode: str
    significant_type_count: int
    hub_shortening_threshold: float

    # Reports
    report_format: str
    report_language: str
    float_digits: int
    top: int


@dataclass
class RunConfig:
    """One CLI invocation: input files, the command and output settings."""

    command: str
    ontology: Optional[Path] = None
    nodes: Optional[Path] = None
    links: Optional[Path] = None
    output: Optional[Path] = None
    output_format: str = "table"
    language: str = "en"

    def resolve(self) -> "RunConfig":
        """Resolve every path to an absolute path."""
        for name in ("ontology", "nodes", "links", "output"):
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, Path(value).expanduser().resolve())
        return self


def load_config(path: Optional[Path] = None) -> Config:
    """Load configuration from config.yaml (or $SEMGRAPH_CONFIG)."""
    if path is None:
        path = Path(os.getenv("SEMGRAPH_CONFIG", PROJECT_ROOT / "config.yaml"))

    with open(path, encoding="utf-8") as f:
        yaml_config = yaml.safe_load(f)

    yr_mode = yaml_config["stats"]["yr_mode"]
    if yr_mode not in ("literal", "normalized"):
        raise ValueError(f"stats.yr_mode must be 'literal' or 'normalized', got {yr_mode!r}")

    return Config(
        tau=float(yaml_config["relevance"]["tau"]),
        outlier_z=float(yaml_config["relevance"]["outlier_z"]),
        outlier_min_links=int(yaml_config["relevance"]["outlier_min_links"]),
        prune_separator=str(yaml_config["relevance"]["prune_separator"]),
        yr_mode=yr_mode,
        significant_type_count=int(yaml_config["stats"]["significant_type_count"]),
        hub_shortening_threshold=float(yaml_config["stats"]["hub_shortening_threshold"]),
        report_format=yaml_config["reports"]["format"],
        report_language=os.getenv("SEMGRAPH_LANG", yaml_config["reports"]["language"]),
        float_digits=int(yaml_config["reports"]["float_digits"]),
        top=int(yaml_config["reports"]["top"]),
    )
