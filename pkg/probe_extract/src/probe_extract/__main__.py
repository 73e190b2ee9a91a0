"""Allow ``python -m probe_extract``."""

from .cli import entrypoint

if __name__ == "__main__":
    entrypoint()
