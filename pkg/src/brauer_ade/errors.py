class InvariantViolation(RuntimeError):
    """A structural theorem failed to hold on computed data.

    Raised where the mathematics guarantees a property (unique maximal
    element, exact orbit-stabilizer division, rank identity...).  Seeing one
    means a bug, never bad user input.
    """
