"""Common exception base for the package.

Every domain-specific error derives from IronAugError so the CLI can catch
one type and turn it into a diagnostic line plus a nonzero exit status.
"""


class IronAugError(Exception):
    pass
