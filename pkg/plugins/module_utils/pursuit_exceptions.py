from __future__ import absolute_import, division, print_function
__metaclass__ = type


class Error(Exception):
    """
    Abstract base class that serves as a common exception superclass for the
    self-triggered pursuit collection.
    """
    def __init__(self, *args):
        if args:
            self.message = args[0]
        else:
            self.message = None

    def __repr__(self):
        if self.message:
            return "Error: {0}".format(self.message)

    def __str__(self):
        if self.message:
            return self.message


class ParameterError(Error):
    """
    Indicates an input outside the admissible domain of a law or module option.
    """
    def __repr__(self):
        if self.message:
            return "ParameterError: {0}".format(self.message)


class GeometryError(Error):
    """
    Indicates a degenerate geometric configuration, e.g. coincident points
    """
    def __repr__(self):
        if self.message:
            return "GeometryError: {0}".format(self.message)


class EmptyIntersectionError(GeometryError):
    """
    Raised when the reachable discs of the retained estimates do not intersect.
    The measurement model has been violated.
    """
    def __repr__(self):
        if self.message:
            return "EmptyIntersectionError: {0}".format(self.message)


class SolverError(Error):
    """
    Indicates a failure of the trigger-time root search
    """
    def __repr__(self):
        if self.message:
            return "SolverError: {0}".format(self.message)


class InvariantViolation(Error):
    """
    Indicates that a simulated pursuit broke one of the capture guarantees.
    """
    def __repr__(self):
        if self.message:
            return "InvariantViolation: {0}".format(self.message)
