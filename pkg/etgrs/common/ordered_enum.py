from enum import StrEnum
from typing import Self

from etgrs import EtgrsError


class InvalidEnumValueError(EtgrsError):
    """Exception raised for invalid enum values."""


class OrderedEnum(StrEnum):
    """String enum compared case-insensitively and ordered by definition order."""

    def __eq__(self, other: object) -> bool:
        if isinstance(other, str):
            return self.value == other.lower()
        return super().__eq__(other)

    def __lt__(self, other: Self | str) -> bool:
        """
        Check if the member is defined before ``other``.

        Raises
        ------
            InvalidEnumValueError: If ``other`` is a string naming no member.
        """
        if isinstance(other, str) and not isinstance(other, OrderedEnum):
            other = self.parse(other)
        if not isinstance(other, OrderedEnum):
            return NotImplemented
        members = list(self.__class__)
        return members.index(self) < members.index(other)  # type: ignore[arg-type]

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return f"{self.__class__.__name__}.{self.name}"

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}.{self.name}: {self.value}>"

    @property
    def label(self) -> str:
        """Display form used in tables, e.g. ``NMDS`` or ``rank-oracle``."""
        return self.name.replace("_", "-")

    @classmethod
    def parse(cls, text: str) -> Self:
        """Look a member up by value or name, ignoring case and ``-``/``_`` differences."""
        key = text.strip().lower().replace("-", "_")
        for member in cls:
            if key in {member.value, member.name.lower()}:
                return member
        msg = f"'{text}' is not a valid {cls.__name__}"
        raise InvalidEnumValueError(msg)

    @classmethod
    def values(cls) -> list[str]:
        return [member.value for member in cls]
