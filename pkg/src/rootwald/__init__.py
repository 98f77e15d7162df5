"""Exact computer algebra for symmetric point configurations in P^3.

Computes and certifies Waldschmidt constants of the orbit configurations
attached to the reflection groups of types D4, B4, F4 and H4, entirely in
exact arithmetic over Q(sqrt 5).
"""

from rootwald.kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
