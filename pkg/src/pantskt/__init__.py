"""pantskt: curves, pants decompositions, and trisection spines on punctured spheres.

The objects here live on S_{0,n}, the n-punctured sphere.  Curves and arcs
are encoded by normal coordinates with respect to a fixed fan triangulation
(see pantskt.surface), realized as exact rational polylines when geometric
intersection numbers are needed (see pantskt.arrangement).  On top of that
sit pants decompositions and their A-move graph (pantskt.pants), trivial
tangles and their shadow/disc systems (pantskt.tangles), bridge trisection
spines (pantskt.trisection), Farey distance (pantskt.farey), and the
spun 2-bridge machinery that pins the spun trefoil complexity at 15
(pantskt.spun).
"""

from .surface import PuncturedSphere
from .curves import Curve, MultiCurveReport, normalize
from .arrangement import Arc, geometric_intersection

__all__ = [
    "PuncturedSphere",
    "Curve",
    "Arc",
    "MultiCurveReport",
    "normalize",
    "geometric_intersection",
]

__version__ = "0.1.0"
