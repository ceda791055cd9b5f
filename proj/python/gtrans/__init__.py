"""Graph translation operators, their truncated polynomial approximations,
error bounds and hop-radius localization profiles."""

from ._gtrans import *  # noqa: F401,F403
from ._gtrans import __doc__  # noqa: F401
