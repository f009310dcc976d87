"""Flip graphs isomorphic to Yoke graphs: triangulations, arc permutations, caterpillars."""
