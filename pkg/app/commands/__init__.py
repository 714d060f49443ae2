from .trace import cmd_trace
from .evaluate import cmd_eval
from .sweep import cmd_sweep
from .matrix import cmd_matrix_inspect
from .compare import cmd_compare, cmd_grid
from .stats import cmd_stats

__all__ = [
    "cmd_trace",
    "cmd_eval",
    "cmd_sweep",
    "cmd_matrix_inspect",
    "cmd_compare",
    "cmd_grid",
    "cmd_stats",
]
