"""Source package for the k-cactus toolkit."""
