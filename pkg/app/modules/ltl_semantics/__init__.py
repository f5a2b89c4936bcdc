"""Evaluation of LTL formulas on finite temporal models."""
