"""Exception types raised across the package."""


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class Graph6Error(ValueError):
    """Malformed graph6 / sparse6 input."""


class AcyclicGraphError(ValueError):
    """A finite girth was required but the graph is a forest."""


class BoundDomainError(ValueError):
    """Arguments fall outside the range where a formula is known to hold."""


class MachineryError(ValueError):
    """The forcing-chronology apparatus cannot be built for this input."""


class OracleRefused(ValueError):
    """An exhaustive oracle was asked to run beyond its size guard."""
