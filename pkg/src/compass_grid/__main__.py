from .io.cli import entry_point

entry_point()
