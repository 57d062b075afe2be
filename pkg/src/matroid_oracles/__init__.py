"""Matroid Oracles.

Weighted and unweighted matroid intersection under restricted oracles
(rank sum, common independence, common independence plus maximum rank),
with reference exchange-graph algorithms, a brute-force verifier and an
oracle separation witness search.
"""

__version__ = "0.1.0"
__author__ = "Developer"
