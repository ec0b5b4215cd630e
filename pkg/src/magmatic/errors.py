class MagmaError(Exception): pass

# atom domains
class DomainMismatch(MagmaError): pass
class SeedsUnavailable(MagmaError): pass

# kernel
class EmptyGenerators(MagmaError): pass
class KindMismatch(MagmaError): pass
class KindError(MagmaError): pass
class LevelCap(MagmaError): pass

# pairs
class SeedMismatch(MagmaError): pass
class NotAPair(MagmaError): pass
class ArityTooSmall(MagmaError): pass

# relations
class EmptyPresentation(MagmaError): pass
class NotInDomain(MagmaError): pass
class NoGreatestImage(MagmaError): pass
class PresentationTooLarge(MagmaError): pass

# ordinals
class DepthCap(MagmaError): pass
class VariantMismatch(MagmaError): pass
class NotRepresentable(MagmaError): pass

# separation
class NoIncomparableSubmagmas(MagmaError): pass

# oracle
class BoundExceeded(MagmaError): pass
class OutOfRange(MagmaError): pass

# front end
class UnknownSuite(MagmaError): pass
class ConfigError(MagmaError): pass
class UnboundName(MagmaError): pass
class BadForm(MagmaError): pass


class ParseError(MagmaError):
    def __init__(self, message, line, column):
        super().__init__('%d:%d: %s' % (line, column, message))
        self.line = line
        self.column = column


class EvalError(MagmaError):
    """Wraps an engine error together with the sub-expression that raised it."""
    def __init__(self, expr, cause):
        super().__init__('%s in %s: %s' % (type(cause).__name__, expr, cause))
        self.expr = expr
        self.cause = cause
