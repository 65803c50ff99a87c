
from dataclasses import dataclass
from typing import Optional

PASSED = 'Passed'
FAILED = 'Failed'
NOT_CHECKED = 'NotChecked'
VERDICTS = (PASSED, FAILED, NOT_CHECKED)

R1 = 'R1'
R2 = 'R2'
R3 = 'R3'
R4 = 'R4'
REQUIREMENTS = (R1, R2, R3, R4)


@dataclass(frozen=True)
class AssertionOutcome:
    """ Verdict of one requirement monitor over one event log.

    `first_violation` is the time of the earliest violated trigger.
    """
    requirement: str
    verdict: str
    triggers: int = 0
    first_violation: Optional[float] = None
    diagnostic: str = ''

    def __post_init__(self):
        if self.requirement not in REQUIREMENTS:
            raise ValueError('Unknown requirement: '+str(self.requirement))
        if self.verdict not in VERDICTS:
            raise ValueError('Unknown verdict: '+str(self.verdict))
        if (self.verdict == NOT_CHECKED) != (self.triggers == 0):
            raise ValueError('A monitor is not checked if and only if it was never triggered')
        if (self.verdict == FAILED) != (self.first_violation is not None):
            raise ValueError('Only a failed monitor has a violation time')


def judge(requirement, triggers, violations, diagnostic=''):
    """ Build an outcome from the trigger count and the violation times. """
    if triggers == 0:
        return AssertionOutcome(requirement, NOT_CHECKED, 0, None, diagnostic)
    if len(violations) > 0:
        return AssertionOutcome(requirement, FAILED, triggers, min(violations), diagnostic)
    return AssertionOutcome(requirement, PASSED, triggers, None, diagnostic)
