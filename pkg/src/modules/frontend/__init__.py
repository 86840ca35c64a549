"""
fdea Frontend Layer.

User-facing surfaces:
- cli: The fdea command-line tool
"""
