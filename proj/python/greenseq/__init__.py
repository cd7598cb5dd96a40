from ._greenseq import *  # noqa: F401,F403
from ._greenseq import GreenseqError, Quiver
