"""Exception types shared across the package."""


class FaultAtlasError(Exception):
    """Base class for all package errors."""


class InvalidDimensionError(FaultAtlasError):
    """Board dimensions must be integers >= 1."""


class InvalidWitnessError(FaultAtlasError):
    """A tiling references placements that do not belong to its board."""


class WitnessDecodeError(FaultAtlasError):
    """A witness document is malformed or inconsistent with its board."""


class OracleRangeError(FaultAtlasError):
    """Board area exceeds the exhaustive oracle ceiling."""


class ExpansionFailedError(FaultAtlasError):
    """No verifying cut path was found for a band insertion."""


class WitnessUnavailableError(FaultAtlasError):
    """Search budget exhausted before a witness was produced (not a negative verdict)."""


class ParitySpaceTooLargeError(FaultAtlasError):
    """The GF(2) solution set exceeds the enumeration guard (2^16 classes)."""
