"""
Internal implementation details for config_manager.

Do not import from this package directly.
Use the public interface instead.
"""
