"""domkit: exact arithmetic on Dedekind cuts of ordered Abelian groups.

The package has three layers:

* ``groups`` -- computable ordered Abelian groups (Z, Q, localizations,
  lexicographic and crossed products) with exact rational coordinates;
* ``cuts`` -- symbolic Dedekind cuts over those groups, closed under the
  left/right sum, minus and both differences, with a decidable order;
* ``doms`` / ``tables`` / ``constructions`` / ``valuations`` -- the abstract
  double-ordered-monoid interface shared by groups, cut carriers, finite
  addition tables, and all the carrier constructions, plus valuation theory.

``cli`` exposes everything through the ``dom`` command.
"""

from domkit.scalars import Sqrt2
from domkit.groups import Group, FactorSet

__all__ = ["Sqrt2", "Group", "FactorSet"]
