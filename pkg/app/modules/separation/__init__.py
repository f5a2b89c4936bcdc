"""S† saturation and the first-order separability and definability checks."""
