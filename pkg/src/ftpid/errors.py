"""Exception hierarchy shared across the package."""


class FtPidError(Exception):
    """Base class for all errors raised by this package."""


class NormalizationError(FtPidError):
    """Probability mass is negative or does not sum to 1 within tolerance."""


class ReservedSymbolError(FtPidError):
    """An alphabet contains the symbol 0, which is reserved for source failure."""


class AlphabetMismatchError(FtPidError):
    """A support entry uses a symbol outside the declared alphabets."""


class IndexOutOfRange(FtPidError):
    """A source index lies outside [1, n]."""


class OverlappingIndexSets(FtPidError):
    """Two index sets that must be disjoint overlap."""


class ZeroProbabilityTarget(FtPidError):
    """Conditioning on a target symbol with zero probability."""


class CapExceeded(FtPidError):
    """Requested source count exceeds the configured lattice cap."""


class MixedArity(FtPidError):
    """Antichains over different source counts were combined."""


class IncompleteValueMap(FtPidError):
    """A lattice value map does not cover every antichain for its arity."""


class OutOfRange(FtPidError):
    """A failure budget lies outside the representable range."""


class NotAnAntichainError(FtPidError):
    """A family of index sets contains an inclusion-comparable pair."""


class AntichainGrammarError(FtPidError):
    """An antichain string does not match the brace-group grammar."""


class StrategySupportMismatch(FtPidError):
    """A failure strategy is not defined exactly on the system's support."""


class ArityMismatch(FtPidError):
    """Source counts of two objects that must agree differ."""


class ConvergenceFailure(FtPidError):
    """The solver could not certify the requested duality gap."""


class OracleTooLarge(FtPidError):
    """The grid oracle's search space exceeds its evaluation budget."""


class RedundancyOutOfRange(FtPidError):
    """A requested redundancy value is infeasible for the system."""


class ArityError(FtPidError):
    """Operation requires a specific number of source variables."""
