"""
Internal implementation details for log_manager.

Do not import from this package directly.
Use the public interface instead.
"""
