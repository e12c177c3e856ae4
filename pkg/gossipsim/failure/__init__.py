# -*- coding: utf-8 -*-
#

# Imports
from .FailurePlan import FailureInstant, FailurePlan
from .FailureInjector import FailureInjector
from .functional import apply

__all__ = ['FailureInstant', 'FailurePlan', 'FailureInjector', 'apply']
