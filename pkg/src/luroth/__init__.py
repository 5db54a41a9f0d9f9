"""Exact computational pipeline for Morley invariants and Lüroth quartics."""
