"""Permutations, lattice paths, transfer systems and continued fractions."""
