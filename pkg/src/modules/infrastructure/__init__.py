"""
fdea Infrastructure Layer.

Base services with no module dependencies:
- config_manager: YAML configuration and the typed run configuration
- log_manager: Logger namespace, handlers and formatters
"""
