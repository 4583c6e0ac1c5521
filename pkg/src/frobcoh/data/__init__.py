"""Problem files shipped with the package.

``x0_23``, ``x0_67``, ``fermat_3`` and ``elliptic_j0`` are readable with
:func:`fixture_text` and accepted by the command-line ``--input`` flag via
:func:`fixture_path`.
"""

from importlib import resources

__all__ = ["FIXTURES", "fixture_path", "fixture_text"]

FIXTURES = ("x0_23", "x0_67", "fermat_3", "elliptic_j0")


def fixture_path(name: str) -> str:
    """Filesystem path of the fixture ``name`` (without the ``.txt`` suffix)."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return str(resources.files(__name__).joinpath(f"{name}.txt"))


def fixture_text(name: str) -> str:
    with open(fixture_path(name), encoding="utf-8") as fh:
        return fh.read()
