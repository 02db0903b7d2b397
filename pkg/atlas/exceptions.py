"""
Errors raised by the atlas library.

Everything derives from AtlasError; the management commands turn a domain
failure into a CommandError (exit status 1) with the message intact.
"""


class AtlasError(Exception):
    """Base class for every domain error of the atlas."""


class BadInput(AtlasError, ValueError):
    pass


class NotSquarefree(BadInput):
    def __init__(self, n, prime):
        self.n = n
        self.prime = prime
        super().__init__('{} is not squarefree ({}^2 divides it)'.format(n, prime))


class InternalInconsistency(AtlasError):
    """A formula produced a value that violates a proven identity."""


class GenusTooSmall(AtlasError):
    def __init__(self, D, genus):
        self.D = D
        self.genus = genus
        super().__init__('V_{} has genus {}, at least 2 is required'.format(D, genus))


class UnsupportedInput(AtlasError):
    pass


class BadPrime(AtlasError):
    def __init__(self, D, ell):
        self.D = D
        self.ell = ell
        super().__init__('{} is not a prime of good reduction for V_{}'.format(ell, D))


class WrongShape(AtlasError):
    pass


class TorsionPresent(AtlasError):
    def __init__(self, D, p):
        self.D = D
        self.p = p
        super().__init__('M_{} at p={} is not uniformized by a torsion-free group'.format(D, p))


class NotInvolution(AtlasError):
    pass


class NotGenusOne(AtlasError):
    def __init__(self, betti):
        self.betti = betti
        super().__init__('quotient graph has first Betti number {}, expected 1'.format(betti))


class ParseError(AtlasError):
    def __init__(self, line_number, message, line=''):
        self.line_number = line_number
        self.line = line
        super().__init__('line {}: {}'.format(line_number, message))


class DuplicateLabel(AtlasError):
    def __init__(self, label, line_number=None):
        self.label = label
        self.line_number = line_number
        super().__init__('duplicate curve label {} (line {})'.format(label, line_number))


class BadReduction(AtlasError):
    def __init__(self, label, p):
        self.label = label
        self.p = p
        super().__init__('{} has bad reduction at {}'.format(label, p))


class NotMultiplicative(AtlasError):
    def __init__(self, label, p):
        self.label = label
        self.p = p
        super().__init__('{} does not have multiplicative reduction at {}'.format(label, p))


class AmbiguousClass(AtlasError):
    def __init__(self, D, m, candidates):
        self.D = D
        self.m = m
        self.candidates = candidates
        super().__init__('V_{}/<w_{}>: {} isogeny classes match ({})'.format(
            D, m, len(candidates), ', '.join(candidates) or 'none'))


class MissingConductor(AtlasError):
    def __init__(self, conductor):
        self.conductor = conductor
        super().__init__('curve database has no curves of conductor {}'.format(conductor))


class FixtureError(AtlasError):
    pass
