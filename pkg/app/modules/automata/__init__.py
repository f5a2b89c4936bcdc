"""Finite automata: NFA/DFA algebra, membership, emptiness and counter-freeness."""
