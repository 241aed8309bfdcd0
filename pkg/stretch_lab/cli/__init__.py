from .compare import TRICHOTOMY, run_compare
from .config import FORMATS, QUANTITIES, SweepConfig
from .document import InputDocument, format_document, parse_input
from .main import main
from .sweep import (
    SWEEP_COLUMNS,
    run_asymptote,
    run_height,
    run_leaf,
    run_sweep,
    run_truncate,
)
from .writers import (
    SERIALIZE_LOG_THRESHOLD,
    CsvWriter,
    SvgWriter,
    TableWriter,
    Writer,
    serialize_value,
)
