"""
Internal implementation details for cli.

Do not import from this package directly.
Use the public interface instead.
"""
