"""Parsers and printers: LTL formulas, regular expressions, automaton documents."""
