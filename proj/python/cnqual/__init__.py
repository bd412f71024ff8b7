"""Sharp CFL bounds for positivity and max-norm contractivity of
Crank-Nicolson stepping on the 1-D heat equation."""

from ._cnqual import *  # noqa: F401,F403
from ._cnqual import __doc__  # noqa: F401
