"""Exception hierarchy. Every input-validation failure derives from InputError."""


class KatoError(Exception):
    pass


class InputError(KatoError, ValueError):
    pass


class EntryOutOfRange(InputError):
    pass


class BadUnit(InputError):
    def __init__(self, i):
        super().__init__(f"unit law fails at element {i}")
        self.i = i


class NotCommutative(InputError):
    def __init__(self, i, j):
        super().__init__(f"{i}*{j} != {j}*{i}")
        self.i, self.j = i, j


class NotAssociative(InputError):
    def __init__(self, i, j, k):
        super().__init__(f"({i}*{j})*{k} != {i}*({j}*{k})")
        self.triple = (i, j, k)


class CarrierTooLarge(InputError):
    pass


class NotT0(InputError):
    pass


class NotMonoidalBase(InputError):
    pass


class NoTop(InputError):
    pass


class NotMeetSemilattice(InputError):
    pass


class EmptyFamily(InputError):
    pass


class NotMMorphism(InputError):
    pass


class TargetNotMCJS(InputError):
    pass


class BaseTooLarge(InputError):
    pass


class SearchSpaceTooLarge(KatoError):
    pass


class ImageNotPrime(KatoError):
    pass


class NotPrime(KatoError):
    pass
