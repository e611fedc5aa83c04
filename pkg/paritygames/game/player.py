from enum import IntEnum


class Player(IntEnum):
    """
    One of the two players of a parity game. The integer value is the
    embedding used by the backwards induction, EVEN = -1 and ODD = +1,
    so that ``a * b == 1`` means "a and b are the same player".
    """

    EVEN = -1
    ODD = 1

    @property
    def opponent(self) -> "Player":
        return Player(-self.value)

    @property
    def code(self) -> int:
        """
        The PGSolver owner/winner code: 0 for Even, 1 for Odd.
        """
        return 0 if self is Player.EVEN else 1

    @classmethod
    def from_code(cls, code: int) -> "Player":
        if code == 0:
            return cls.EVEN
        if code == 1:
            return cls.ODD
        raise ValueError(f"Player code must be 0 or 1, got {code!r}")

    def __str__(self):
        return self.name.lower()


def par(priority: int) -> Player:
    """
    The player favoured by a priority: Odd for odd priorities, Even otherwise.
    """
    return Player.ODD if priority % 2 == 1 else Player.EVEN
