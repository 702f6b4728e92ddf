from functools import wraps
from inspect import getfullargspec as spec
from typing import Optional


class Context:
    """Stores what is being processed, for error messages."""
    source = None
    vector = None

    @classmethod
    def format(cls):
        return '{}{}'.format(
            'In triangulation: {}\n'.format(cls.source) if cls.source is not None else '',
            'With vector: {}\n'.format(cls.vector) if cls.vector is not None else ''
        )


def context(source: Optional[str]=None, vector: Optional[str]=None):
    """Record an argument of the decorated function as the current context."""
    def outer(func):
        @wraps(func)
        def inner(*args, **kwargs):
            if source is not None:
                Context.source = _argument(func, source, args, kwargs)
                Context.vector = None
            if vector is not None:
                Context.vector = _argument(func, vector, args, kwargs)
            return func(*args, **kwargs)
        return inner
    return outer


def _argument(func, name: str, args, kwargs):
    if name in kwargs:
        return kwargs[name]
    return args[spec(func).args.index(name)]
