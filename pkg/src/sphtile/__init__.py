"""
sphtile: edge-to-edge tilings of the sphere by congruent triangles and quadrilaterals
"""

__version__ = "1.0.0"
