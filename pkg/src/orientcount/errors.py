class CapExceededError(RuntimeError):
    """A requested enumeration is larger than the configured cap."""


class InvariantError(AssertionError):
    """An exact identity that must hold on every valid input failed.

    This always indicates a bug in the package, never bad user input.
    """


def check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise CapExceededError(f"{what}: {size} exceeds cap {cap}; raise the cap to run anyway")
