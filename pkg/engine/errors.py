class NormqError(Exception):
    """Represents a data error: bad input, violated precondition, exhausted budget."""
    pass
