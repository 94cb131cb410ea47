"""
Applications package containing the entry points of the Carlitz workbench.

This package contains:
- the command-line dispatcher
- the workbench that wires every component from a RunConfig
- the lemma suite behind ``verify all``
"""

__version__ = "1.0.0"
