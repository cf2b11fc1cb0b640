"""Exact compiler and verification toolkit for single-qutrit Clifford+D gates.

The group of 3x3 unitaries over Z[zeta_9, 1/3], taken projectively, is
generated by the Fourier-type gate H together with the diagonal gates D.
This package synthesizes any such unitary into a gate word by descending the
3-adic Bruhat-Tits tree, computes Bass-Serre normal forms for the underlying
amalgam decomposition, reduces gates modulo the primes above 19, and measures
empirical covering rates of gate-word balls over PU(3).
"""

__version__ = "0.1.0"
