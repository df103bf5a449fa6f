"""Exception hierarchy shared by the analyzer modules."""


class GameError(ValueError):
    """Base class for invalid game inputs."""


class DimensionError(GameError):
    """A strategy or matrix does not match the game's action counts."""


class ActionSpaceMismatch(GameError):
    """Two games that must share an action space do not."""


class DegenerateGameError(GameError):
    """An operation that needs a nondegenerate game received a degenerate one."""


class ParseError(GameError):
    """Malformed game file. Carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
