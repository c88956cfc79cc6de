"""Bayesian policy reuse: select a pre-learnt policy for an unknown task from a few episodes."""

__version__ = "0.1.0"
