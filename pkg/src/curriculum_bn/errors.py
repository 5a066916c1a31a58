"""Exception hierarchy shared by the engine, CLI and service.

Every error carries a stable machine-readable ``code`` (closed set) and an
optional ``locus`` naming the variable/row/field the problem was found at.
"""


class EngineError(Exception):
    code = "usage_error"

    def __init__(self, message, locus=None):
        super().__init__(message)
        self.locus = locus


class ParseError(EngineError):
    """Input text is not well-formed (bad JSON, bad CSV, bad evidence string)."""

    code = "parse_error"


class SchemaError(EngineError):
    """Well-formed document whose fields do not match the model schema."""

    code = "schema_error"


class ModelValidationError(EngineError):
    """A candidate network violates structural/CPT invariants."""

    code = "validation_error"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class UnknownSymbolError(EngineError):
    """Reference to a variable or state that the model does not declare."""

    code = "unknown_symbol"


class ImpossibleEvidenceError(EngineError):
    """The supplied evidence has probability zero under the model."""

    code = "impossible_evidence"


class DegenerateBaselineError(EngineError):
    """Impact baseline probability is exactly 0 or 1; log-odds undefined."""

    code = "degenerate_baseline"


class SizeLimitError(EngineError):
    """A computation would exceed the configured enumeration cap."""

    code = "size_limit"


class UsageError(EngineError):
    code = "usage_error"
