"""GrayGreed - greedy homogeneous Gray codes for constrained binary words."""

__version__ = "0.1.0"
__author__ = "GrayGreed Team"
