"""Transition and syntactic semigroups, idempotent powers and aperiodicity."""
