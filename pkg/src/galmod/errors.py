"""Exception hierarchy shared by every galmod module."""


class GalmodError(Exception):
    """Base class; every domain error has a short machine-readable ``code``."""

    code = "galmod-error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class NonInvertible(GalmodError, ZeroDivisionError):
    code = "non-invertible"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

    def to_dict(self):
        d = super().to_dict()
        if self.witness is not None:
            d["witness"] = list(getattr(self.witness, "exponents", self.witness))
        return d


class InvalidGaloisIndex(GalmodError, ValueError):
    code = "invalid-galois-index"


class ZeroValuation(GalmodError, ValueError):
    code = "zero-valuation"


class SizeLimit(GalmodError, ValueError):
    code = "size-limit"


class GroupMismatch(GalmodError, ValueError):
    code = "group-mismatch"


class BadSubgroup(GalmodError, ValueError):
    code = "bad-subgroup"


class WildRamification(GalmodError, ValueError):
    code = "wild-ramification"


class NotPrimitive(GalmodError, ValueError):
    code = "not-primitive"


class BadTrace(GalmodError, ValueError):
    code = "bad-trace"


class BadTable(GalmodError, ValueError):
    code = "bad-table"


class NonIntegralExponent(GalmodError, ValueError):
    code = "non-integral-exponent"


class Singular(GalmodError, ValueError):
    code = "singular"


class ChtViolation(GalmodError, AssertionError):
    code = "cht-violation"

    def __init__(self, message, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs

    def to_dict(self):
        d = super().to_dict()
        d["lhs"] = self.lhs
        d["rhs"] = self.rhs
        return d


class SchemaError(GalmodError, ValueError):
    """Descriptor failed validation; ``pointer`` is a JSON pointer into the input."""

    code = "schema-error"

    def __init__(self, message, pointer=""):
        super().__init__(message)
        self.pointer = pointer

    def to_dict(self):
        d = super().to_dict()
        d["pointer"] = self.pointer
        return d
