"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class FcbscError(ValueError):
    code = "error"


class CompositeCharacteristic(FcbscError):
    code = "composite_characteristic"


class ReduciblePolynomial(FcbscError):
    code = "reducible_polynomial"


class UnsupportedOrder(FcbscError):
    code = "unsupported_order"


class ZeroInverse(FcbscError, ZeroDivisionError):
    code = "zero_inverse"


class LengthMismatch(FcbscError):
    code = "length_mismatch"


class FieldMismatch(FcbscError):
    code = "field_mismatch"


class LengthBelowWidth(FcbscError):
    code = "length_below_width"


class RankDeficient(FcbscError):
    code = "rank_deficient"


class BadShape(FcbscError):
    code = "bad_shape"


class DomainTooLarge(FcbscError):
    code = "domain_too_large"


class DuplicateMessage(FcbscError):
    code = "duplicate_message"


class IndexOutOfRange(FcbscError, IndexError):
    code = "index_out_of_range"


class SizeMismatch(FcbscError):
    code = "size_mismatch"


class WrongField(FcbscError):
    code = "wrong_field"


class ShapeMismatch(FcbscError):
    code = "shape_mismatch"


class BudgetExhausted(FcbscError):
    code = "budget_exhausted"
