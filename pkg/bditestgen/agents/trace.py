
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

FIRED = 'fired'
FAILED = 'failed'
IGNORED = 'ignored'


@dataclass(frozen=True)
class TraceRecord:
    """ One reasoning step of one agent.

    `beliefs` is the belief base the plan was selected against, i.e. after the
    belief update carried by the event.
    """
    step: int
    agent: str
    plan_id: Optional[str]
    event: object
    actions: Tuple
    outcome: str
    beliefs: Tuple[str, ...] = ()

    def __str__(self):
        plan = self.plan_id if self.plan_id is not None else '-'
        return str(self.step)+'\t'+self.agent+'\t'+plan+'\t'+str(self.event)+'\t'+self.outcome+'\t' \
            + '; '.join(str(a) for a in self.actions)


@dataclass
class MasTrace:
    """ Ordered record of the steps of a MAS run. """
    records: List[TraceRecord] = field(default_factory=list)
    truncated: bool = False
    elapsed: float = 0.0

    def append(self, record):
        if len(self.records) > 0 and record.step <= self.records[-1].step:
            raise ValueError('Trace steps must be strictly increasing')
        self.records.append(record)

    def records_of(self, agent):
        return [r for r in self.records if r.agent == agent]

    def fired(self):
        return [r for r in self.records if r.outcome == FIRED]

    def failed_events(self):
        return [r for r in self.records if r.outcome == FAILED]

    def plan_ids(self):
        return [r.plan_id for r in self.records if r.plan_id is not None]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __eq__(self, other):
        if not isinstance(other, MasTrace):
            return NotImplemented
        return [str(r) for r in self.records] == [str(r) for r in other.records] \
            and self.truncated == other.truncated and self.elapsed == other.elapsed

    def dumps(self):
        """ Return the trace as text, one record per line. """
        lines = [str(r) for r in self.records]
        if self.truncated:
            lines.append('# truncated')
        return '\n'.join(lines)+('\n' if len(lines) > 0 else '')
