"""Finite type theories of knot-like structures.

Subpackages cover exact sparse linear algebra over Z and Z/pZ (`algebra`),
the cube category and monoid complexes (`cubes`), generic diagram categories
with subdiagram-sum maps (`diagrams`), the virtual transverse knot pipeline
(`vtk`), loom words for the delta-move theory (`looms`), and comb-diagram
string rewriting (`comb`).
"""

__version__ = "0.1.0"
