"""Tests package for the k-cactus toolkit."""
