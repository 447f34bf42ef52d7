"""
Test suite for ConeCheck

Organization:
- unit/: Fast, isolated tests per module
- integration/: CLI end to end (exit codes, reports, worked values)
- property/: Property-based tests using Hypothesis
"""
