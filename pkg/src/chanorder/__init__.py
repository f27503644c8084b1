"""Ordering, equivalence and invariants of discrete memoryless channels."""
