from . import cylinder, halfplane, numerics, stretch
from .version import version as __version__
