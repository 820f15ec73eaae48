"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: parameter/usage problems exit 2,
resource-budget refusals exit 3, internal inconsistencies exit 1.
"""


class HypersimplexError(Exception):
    """Base class for all toolkit errors."""


class ParameterError(HypersimplexError, ValueError):
    """Arguments outside an operation's documented domain."""


class UnsupportedParametersError(ParameterError):
    """A parameter combination we refuse to compute (names the failed condition)."""


class InvalidCompositionError(ParameterError):
    """Composition violates its prefix-sum bounds."""


class NotLabelableError(ParameterError):
    """Simplex uses no r-adjacent vertex, so it belongs to a deeper stability level."""


class ResourceBudgetError(HypersimplexError, RuntimeError):
    """Computation would exceed a configured size or time budget."""


class InternalInconsistencyError(HypersimplexError, AssertionError):
    """Two routes that must agree produced different answers; indicates a bug."""


class StructuralError(HypersimplexError, RuntimeError):
    """Recovered combinatorial data violates a structural premise (reported, never patched)."""
