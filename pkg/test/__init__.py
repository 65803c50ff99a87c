"""
This package has automated unit-tests for bditestgen.
"""
