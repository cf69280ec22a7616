"""Error types shared across the package.

Contract violations (bad arguments, malformed text) raise plain
``ValueError``; the two classes here mark situations with more meaning.
"""


class NotInSubalgebraError(ValueError):
    """An element of the permutation algebra is not constant on some
    congruence class, so it cannot be rewritten in a class-sum basis.

    ``pair`` holds the offending class, as a twin pair of unlabeled trees.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InternalInvariantError(RuntimeError):
    """A structural theorem the implementation relies on was falsified
    (non-complementary canopies from insertion, a class without a unique
    Baxter member, a class sum failing to collect).  Indicates a bug, not
    bad input.
    """
