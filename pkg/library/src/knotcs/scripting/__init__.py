"""
Support for writing scripts on top of the knotcs library.

The expected usage of core knotcs types is like:

    from knotcs.csinv import orbifold_cs

The scripting package is not part of the numerical core and contains
extensions used by the command-line tool. The expected usage is:

    from knotcs.scripting import knotcs_logging

That is, each module whose name starts with `knotcs_` in this package
is an independent extension module you may load when writing scripts
that compute many invariants at once.
"""
