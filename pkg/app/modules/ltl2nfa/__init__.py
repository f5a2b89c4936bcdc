"""Atom construction compiling LTL formulas to NFAs over 2^vars."""
