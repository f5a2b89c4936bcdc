"""Analysis modules: parsers, automata, semigroups, separation and interpolation."""
