"""Semi-infinite convex programs as well-scaled SDPs via SOS interpolants."""

from . import chebkit

__version__ = "0.1.0"

__all__ = ["chebkit", "__version__"]
