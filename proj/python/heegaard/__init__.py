from ._core import (
    Diagram,
    InvalidInput,
    certify,
    fixtures,
    load,
    matrix,
    parity,
    parse,
    random_diagram,
    rectangle_condition,
    run,
)

__all__ = [
    "Diagram",
    "InvalidInput",
    "certify",
    "fixtures",
    "load",
    "matrix",
    "parity",
    "parse",
    "random_diagram",
    "rectangle_condition",
    "run",
]
