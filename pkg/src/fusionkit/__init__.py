"""fusionkit: saturated fusion systems and linking systems over small p-groups,
with exact brute-force oracles for everything.
"""

__version__ = "0.1.0"

from .groups import PermGroup, Subgroup  # noqa: F401
from .presets import preset  # noqa: F401
