"""Exception hierarchy shared by every module in the package."""


class IdsError(Exception):
    """Base class; the CLI renders these by class name."""


class GraphError(IdsError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, v):
        super().__init__(f"self-loop at vertex {v}")
        self.v = v


class DuplicateArc(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate arc {u}->{v}")
        self.u, self.v = u, v


class VertexOutOfRange(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} outside 0..{n - 1}")
        self.v, self.n = v, n


class ParseError(IdsError, ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class NotAnIds(IdsError, ValueError):
    pass


class NotUndirectedIds(IdsError, ValueError):
    pass


class TrivialGraph(IdsError, ValueError):
    pass


class TooLarge(IdsError, ValueError):
    pass


class TooManyEdges(IdsError, ValueError):
    pass


class CapExceeded(IdsError, RuntimeError):
    pass


class NotInFamily(IdsError, ValueError):
    pass


class NotOrientation(IdsError, ValueError):
    pass


class BadSpec(IdsError, ValueError):
    pass


class UnknownStatement(IdsError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class BoundTooLarge(IdsError, ValueError):
    pass
