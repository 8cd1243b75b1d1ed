"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(DomainError):
    """An orbital parameter set violates one of its invariants."""

    invariant = "orbital-spec"

    def __init__(self, message):
        super().__init__(f"[{self.invariant}] {message}")


class NuOutOfRange(ValidationError):
    invariant = "nu-range"


class NonIntegerDegree(ValidationError):
    invariant = "integer-degree"


class OrderTooSmall(ValidationError):
    invariant = "laguerre-order"


class DimensionTooSmall(ValidationError):
    invariant = "dimension"


class NonPositiveZeta(ValidationError):
    invariant = "zeta-positive"


class NonFiniteParameter(ValidationError):
    invariant = "finite"


class NumericalFailure(ArithmeticError):
    """An iterative algorithm did not converge within its budget."""


class EvaluationError(ArithmeticError):
    """An integrand returned a non-finite value at a quadrature node."""

    def __init__(self, index, node, value):
        self.index = index
        self.node = node
        self.value = value
        super().__init__(f"integrand is {value!r} at node {index} (x={node!r})")
