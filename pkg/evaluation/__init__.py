"""Perturbation corpus, brute-force oracles and the acceptance suite."""
