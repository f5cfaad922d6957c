"""Dynamical types of orientation-preserving isometries of hyperbolic 5-space."""

from enum import Enum


class DynamicalType(str, Enum):
    TWO_ROTATORY_HYPERBOLIC = "two-rotatory-hyperbolic"
    TWO_ROTATORY_ELLIPTIC = "two-rotatory-elliptic"
    ONE_ROTATORY_HYPERBOLIC = "one-rotatory-hyperbolic"
    TRANSLATION = "translation"
    STRETCH = "stretch"
    ONE_ROTATORY_ELLIPTIC = "one-rotatory-elliptic"
    ONE_ROTATORY_PARABOLIC = "one-rotatory-parabolic"
    IDENTITY = "identity"

    def __str__(self) -> str:
        return self.value

    @property
    def family(self) -> str:
        """'elliptic', 'parabolic' or 'hyperbolic' (identity counts as elliptic)."""
        if self in (DynamicalType.TRANSLATION, DynamicalType.ONE_ROTATORY_PARABOLIC):
            return "parabolic"
        if self in (DynamicalType.TWO_ROTATORY_HYPERBOLIC,
                    DynamicalType.ONE_ROTATORY_HYPERBOLIC, DynamicalType.STRETCH):
            return "hyperbolic"
        return "elliptic"
