"""Commands package for the k-cactus toolkit."""
