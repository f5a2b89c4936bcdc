"""Craig interpolant existence for LTL over finite timelines."""
