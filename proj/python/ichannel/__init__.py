"""Rate regions of the two-sender free-space optical interference channel."""

from ._ichannel import *  # noqa: F401,F403
from ._ichannel import __doc__  # noqa: F401
