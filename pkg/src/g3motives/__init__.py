"""Exact interpolation engine for motivic Euler characteristics.

Subpackages:

* ``motives``   -- the generator monoid, Frobenius data, expressions
* ``symfunc``   -- symmetric-function series with plethysm
* ``partitions``-- partitions and symmetric-group characters
* ``leray``     -- symplectic characters, branching, pointed translation
* ``lowgenus``  -- closed forms for genus <= 2 classes
* ``strata``    -- boundary strata (direct and generating-function engines)
* ``interp``    -- ansatz construction and exact relation solving
* ``counts``    -- finite-field curve censuses and weighted traces
* ``cli``       -- command-line interface
"""

__version__ = "0.1.0"
