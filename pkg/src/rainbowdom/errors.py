"""Exception hierarchy shared by every module.

All errors derive from :class:`RainbowError` so the CLI can turn any domain
failure into a structured message with exit code 1.
"""


class RainbowError(Exception):
    code = "error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class InvalidParameter(RainbowError, ValueError):
    code = "invalid-parameter"


class ParseError(RainbowError, ValueError):
    code = "parse-error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

    def to_dict(self):
        d = super().to_dict()
        d["position"] = self.position
        return d


class OutOfDomain(RainbowError, ValueError):
    code = "out-of-domain"


class UnsupportedGraph(RainbowError, ValueError):
    code = "unsupported-graph"


class UnsupportedParameters(RainbowError, ValueError):
    code = "unsupported-parameters"


class InstanceTooLarge(RainbowError):
    code = "instance-too-large"
