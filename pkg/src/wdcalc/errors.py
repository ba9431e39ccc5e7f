"""Exception hierarchy.  The CLI maps these onto exit codes."""


class WdcalcError(Exception):
    pass


class DomainError(WdcalcError, ValueError):
    """A mathematical precondition was violated (CLI exit code 1)."""


class NotACharacterError(DomainError):
    pass


class UnresolvableAtomError(DomainError):
    pass


class ExplicitModeError(DomainError):
    pass


class LinkedSegmentsError(DomainError):
    def __init__(self, first, second):
        super().__init__(f"linked segments: {first} and {second}")
        self.pair = (first, second)


class CatalogError(WdcalcError):
    """Catalog file unreadable or an entry violates a CuspidalDatum invariant."""


class CertificateError(WdcalcError):
    """Raised by the certificate checker when a certificate does not replay."""


class ParseError(WdcalcError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"at byte {offset}: {message}{detail}")
