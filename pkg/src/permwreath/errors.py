"""Exception hierarchy shared by every module of the package."""


class WreathError(Exception):
    """Base class for all domain errors raised by permwreath."""

    code = "domain_error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class MixedGroupKinds(WreathError, TypeError):
    code = "mixed_group_kinds"


class PointOutOfDomain(WreathError, ValueError):
    code = "point_out_of_domain"


class UnboundSymbol(WreathError, KeyError):
    code = "unbound_symbol"

    def __str__(self):
        return Exception.__str__(self)


class InvalidElement(WreathError, ValueError):
    code = "invalid_element"


class DescriptorError(WreathError, ValueError):
    """A JSON descriptor failed to parse; carries the JSON path of the fault."""

    code = "descriptor_error"

    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")

    def to_dict(self):
        return {"error": self.code, "path": self.path, "reason": self.reason}


class TruncationEscape(WreathError):
    code = "truncation_escape"


class RadiusBudgetExceeded(WreathError):
    code = "radius_budget_exceeded"


class MaskWidthExceeded(WreathError):
    code = "mask_width_exceeded"


class NotFullyEnumerable(WreathError):
    code = "not_fully_enumerable"


class BudgetExceeded(WreathError):
    code = "budget_exceeded"


class ClassifierViolation(WreathError):
    code = "classifier_violation"

    def __init__(self, message, pair=None, generator=None):
        super().__init__(message)
        self.pair = pair
        self.generator = generator


class ConditionViolated(WreathError):
    code = "condition_violated"

    def __init__(self, condition, witness):
        super().__init__(f"condition {condition!r} fails; witness {witness!r}")
        self.condition = condition
        self.witness = witness


class NotInvariant(WreathError):
    code = "not_invariant"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MissingRepresentatives(WreathError):
    code = "missing_representatives"


class PreconditionNotFP(WreathError):
    code = "precondition_not_fp"


class TrivialLabel(WreathError, ValueError):
    code = "trivial_label"


class NotIncreasing(WreathError):
    code = "not_increasing"


class NotRegularOnClass(WreathError):
    code = "not_regular_on_class"

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class NotHomomorphism(WreathError):
    code = "not_homomorphism"


class NotSurjective(WreathError):
    code = "not_surjective"


class NotNormal(WreathError):
    code = "not_normal"


class DoesNotContainH(WreathError):
    code = "does_not_contain_h"
