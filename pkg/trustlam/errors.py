"""
Exceptions raised by trustlam and the diagnostic records the CLI prints for them.

Every error carries a short ``code`` and the ``exit_code`` used by the
:doc:`../commands/index` when the error reaches the command line.
"""
from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class Diagnostic:
    """
    Single error or warning tied (when possible) to a source location.

    Args:
        code (str): Short kebab-case identifier, e.g. ``'unbound-variable'``.
        message (str): Human readable description.
        line (int or None): 1-based source line, None if unknown.
        col (int or None): 1-based source column, None if unknown.
        severity (str): ``'error'`` or ``'warning'``.
    """
    code: str
    message: str
    line: int = None
    col: int = None
    severity: str = "error"

    def to_dict(self):
        return asdict(self)


class TrustlamError(Exception):
    """Base class for every error trustlam raises on purpose."""
    code = "error"
    exit_code = 1

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def diagnostics(self):
        return [Diagnostic(self.code, self.message, self.line, self.col)]


class ConfigError(TrustlamError):
    code = "config"
    exit_code = 1


class ParseError(TrustlamError):
    """Syntax errors and malformed declarations in program text."""
    code = "parse"
    exit_code = 3

    def __init__(self, message, line=None, col=None, code=None):
        super().__init__(message, line, col)
        if code:
            self.code = code


class TypeCheckError(TrustlamError):
    """
    Raised when a term has no type under the typing rules. Collects all
    diagnostics found while checking sibling subterms.

    Args:
        diagnostics (list[Diagnostic]): Every error found, in source order.
    """
    code = "type"
    exit_code = 4

    def __init__(self, diagnostics):
        self._diagnostics = list(diagnostics)
        first = self._diagnostics[0]
        super().__init__(first.message, first.line, first.col)
        self.code = first.code

    def diagnostics(self):
        return list(self._diagnostics)


class EvaluationError(TrustlamError):
    code = "evaluation"
    exit_code = 5


class StuckTermError(EvaluationError):
    """A closed non-value with no redex. Only reachable through a type checker bug."""
    code = "stuck"


class FuelExhaustedError(EvaluationError):
    code = "fuel-exhausted"


class LimitError(TrustlamError):
    code = "limit"
    exit_code = 6


class NodeLimitError(LimitError):
    """
    Reduction tree larger than the node limit.

    Args:
        limit (int): Node limit in force.
        needed (int or None): Exact number of nodes of the complete tree, None
            when the limit bounds distinct terms rather than tree nodes.
    """
    code = "node-limit"

    def __init__(self, limit, needed):
        if needed is None:
            msg = f"reduction explores more than {limit} terms"
        else:
            msg = f"reduction tree needs {needed} nodes but node limit is {limit}"
        msg += " (raise --node-limit or TRUSTLAM_NODE_LIMIT)"
        super().__init__(msg)
        self.limit = limit
        self.needed = needed


class EnumerationLimitError(LimitError):
    code = "enumeration-limit"

    def __init__(self, limit, needed):
        msg = f"confidence needs {needed} count vectors but enumeration limit is {limit}"
        super().__init__(msg)
        self.limit = limit
        self.needed = needed
