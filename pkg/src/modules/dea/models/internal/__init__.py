"""
Internal implementation details for models.

Do not import from this package directly.
Use the public interface instead.
"""
