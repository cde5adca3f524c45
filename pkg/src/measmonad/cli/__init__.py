"""Command-line interface and measure documents."""

from .document import (
    DocumentError,
    KindMismatch,
    MalformedRational,
    ParseError,
    SchemaError,
    dump_measure_document,
    parse_measure_document,
)
from .grid import EmptyRegion, grid_uniform
from .main import main, run
