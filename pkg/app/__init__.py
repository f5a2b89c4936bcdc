"""Star-free separability and LTL interpolation service."""
