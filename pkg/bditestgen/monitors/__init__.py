
from . import outcome
from . import requirements
from . import report

from .outcome import AssertionOutcome, PASSED, FAILED, NOT_CHECKED, REQUIREMENTS
from .requirements import monitor_r1, monitor_r2, monitor_r3, monitor_r4, check_requirements
from .report import TestResult, SuiteReport, aggregate, save_report, load_report
