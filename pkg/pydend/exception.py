import typing as t

if t.TYPE_CHECKING:
    from .laws.report import LawReport


class DendException(Exception):
    pass


class FieldException(DendException):
    pass


class TreeException(DendException):
    pass


class StructureException(DendException):
    pass


class GateException(StructureException):
    def __init__(self, gate: str, report: "LawReport"):
        counterexamples = report.get_counterexamples()
        first = counterexamples[0]["inputs"] if counterexamples else "n/a"
        msg = f"{gate} gate failed: {report.get_violations()} violation(s), first at {first}"
        super().__init__(msg)
        self.report = report


class EnvelopeException(DendException):
    pass


class ConfigException(DendException):
    pass
