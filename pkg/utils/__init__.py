"""Utility modules for the k-cactus toolkit."""
