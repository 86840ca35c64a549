"""
Internal implementation details for linprog.

Do not import from this package directly.
Use the public interface instead.
"""
