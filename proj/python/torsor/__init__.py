"""Exact symbolic checker for quantum torsors and Hopf-Galois systems.

The heavy lifting lives in the compiled extension ``torsor._core``; this
package re-exports its public surface and adds a couple of convenience
wrappers for assembling suite specs.
"""

import json

try:
    from ._core import (  # noqa: F401
        Algebra,
        BudgetExceeded,
        InconclusiveError,
        ParseError,
        PoleError,
        Scalar,
        ValidationError,
        kashiwara_algebra,
        q,
        q_factorial,
        q_integer,
        q_power,
        quantum_group,
        run_spec,
        run_spec_exit_code,
    )
except ImportError:  # extension built out-of-tree (plain CMake build)
    from _core import (  # noqa: F401
        Algebra,
        BudgetExceeded,
        InconclusiveError,
        ParseError,
        PoleError,
        Scalar,
        ValidationError,
        kashiwara_algebra,
        q,
        q_factorial,
        q_integer,
        q_power,
        quantum_group,
        run_spec,
        run_spec_exit_code,
    )

__all__ = [
    "Algebra",
    "BudgetExceeded",
    "InconclusiveError",
    "ParseError",
    "PoleError",
    "Scalar",
    "ValidationError",
    "kashiwara_algebra",
    "q",
    "q_factorial",
    "q_integer",
    "q_power",
    "quantum_group",
    "run_spec",
    "run_spec_exit_code",
    "run_suite",
]


def run_suite(spec, **kwargs):
    """Run a suite given as a dict (or JSON text) and return the parsed report."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(run_spec(text, **kwargs))
