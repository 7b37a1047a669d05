"""Toolkit for the equation A^3 + B^3 = q^alpha * C^p.

Classifies primes q into the explicit parametrized families that admit an
elliptic curve of conductor 18q, 36q or 72q with rational 2-torsion, builds
the corresponding curve models and Frey curves, and runs the symplectic
residue sieve that rules out congruence classes of prime exponents p.
"""

__version__ = "0.1.0"
