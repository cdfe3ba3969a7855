from dataclasses import dataclass


@dataclass
class EngineSettings:
    schema: str = "sectionflow/1"
    json_indent: int = 2
    log_level: str = "INFO"
    output_directory: str = "sectionflow_out"
    max_witness_search: int = 1_000_000
