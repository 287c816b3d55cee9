class ContractViolation(ValueError):
    """An argument violates a documented precondition."""
