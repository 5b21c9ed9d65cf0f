"""Error types shared across the library.

Validation failures carry a machine-readable axiom identifier such as
``"vine.proximity"`` together with a witness of the violation, so that both
the CLI and the tests can assert on *which* rule broke, not just that
something did.
"""

from __future__ import annotations


class StructureError(ValueError):
    """A structure violates one of its defining axioms, or is malformed."""

    def __init__(self, axiom: str, message: str, witness=None):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.witness = witness


class InternalInconsistencyError(RuntimeError):
    """Raised when an operation that is guaranteed to succeed fails.

    This signals a bug in a species implementation (e.g. a merge failing on a
    compatible pair), never a problem with user input.
    """
