"""Shared constants for literals, reports and verification."""

# Pattern family shorthands accepted by the literal parser
FAMILY_IDENTITY = "id"
FAMILY_TWO_LAYERED = "tl"
FAMILY_LAYERED = "layered"
FAMILY_WEDGE = "wedge"
FAMILY_LP = "Lp"

PATTERN_FAMILIES = {
    FAMILY_IDENTITY,
    FAMILY_TWO_LAYERED,
    FAMILY_LAYERED,
    FAMILY_WEDGE,
    FAMILY_LP,
}

# Quantifier shorthands
QUANTIFIER_AVOID = "avoid"
QUANTIFIER_EXACTLY = "exactly"
QUANTIFIER_ATLEAST = "atleast"

# Base patterns of length three that the closed forms are stated for
BASE_PATTERNS = ("132", "321")

OUTPUT_FORMATS = ("json", "csv", "text")
TIERS = ("proved", "experimental", "all")
VERIFY_SCOPES = (
    "all",
    "chebyshev",
    "avoidance",
    "occurrences",
    "single132",
    "triple",
    "lp",
    "transfer",
    "cfrac",
    "dyck",
    "blockrec",
    "restricted321",
)

# Process exit statuses
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Rule files shipped with the package data directory
BUILTIN_RULES = {
    "binary": "binary.rules",
    "fibonacci": "fibonacci.rules",
    "ak4": "ak4.rules",
}

UP_STEP = "U"
DOWN_STEP = "D"
