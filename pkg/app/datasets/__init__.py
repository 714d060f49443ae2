from .corpus import (
    load_requirements,
    load_answer_set,
    load_bundle,
    dump_requirements,
    dump_answer_set,
    dump_bundle,
)
from .reports import (
    write_links_csv,
    write_sweep_csv,
    write_grid_csv,
    write_compare_csv,
    write_report_json,
    write_term_matrix_csv,
    write_matrix_triples,
    load_links,
)

__all__ = [
    # Corpus
    "load_requirements",
    "load_answer_set",
    "load_bundle",
    "dump_requirements",
    "dump_answer_set",
    "dump_bundle",
    # Reports
    "write_links_csv",
    "write_sweep_csv",
    "write_grid_csv",
    "write_compare_csv",
    "write_report_json",
    "write_term_matrix_csv",
    "write_matrix_triples",
    "load_links",
]
