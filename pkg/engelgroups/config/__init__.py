from .conf import _RunDefaults

# Instantiate the singleton
run_defaults = _RunDefaults()

__all__ = ["run_defaults"]
