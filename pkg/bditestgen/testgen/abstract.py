
import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

from ..agents.plans import EMIT, SEND_BELIEF
from ..agents.trace import FIRED
from ..scenario.builder import HUMAN, META, ROBOT
from ..scenario.subsets import parse_subset, format_subset
from ..utils.misc import textfile_generator


logger = logging.getLogger(__name__)

TELL = 'tell'
RECEIVESIGNAL = 'receivesignal'
SET_PARAM = 'set_param'


@dataclass(frozen=True)
class AbstractAction:
    """ A parameter-free stimulus: `tell X`, `receivesignal` or `set_param key=value`. """
    kind: str
    name: Optional[str] = None
    value: Optional[str] = None

    def __post_init__(self):
        if self.kind not in (TELL, RECEIVESIGNAL, SET_PARAM):
            raise ValueError('Unknown abstract action: '+str(self.kind))

    def __str__(self):
        if self.kind == TELL:
            return TELL+' '+self.name
        if self.kind == SET_PARAM:
            return SET_PARAM+' '+self.name+'='+self.value
        return RECEIVESIGNAL


def parse_abstract_action(text):
    """ Parse one abstract action written as in a test file, e.g. `set_param gaze=1`. """
    parts = text.split()
    if parts == [RECEIVESIGNAL]:
        return AbstractAction(RECEIVESIGNAL)
    if len(parts) == 2 and parts[0] == TELL:
        return AbstractAction(TELL, parts[1])
    if len(parts) == 2 and parts[0] == SET_PARAM and '=' in parts[1]:
        key, value = parts[1].split('=', 1)
        return AbstractAction(SET_PARAM, key, value)
    raise ValueError('Not an abstract action: '+text)


# stimuli the human can produce in the table-assembly task
COMMAND_ALPHABET = tuple(parse_abstract_action(text) for text in (
    'tell leg', 'tell humanReady', 'receivesignal',
    'set_param gaze=1', 'set_param gaze=0',
    'set_param pressure=1', 'set_param pressure=0',
    'set_param location=1', 'set_param location=0',
    'set_param leave=1'))


@dataclass(frozen=True)
class AbstractTest:
    """ Ordered stimulus actions extracted from a model trace. """
    actions: Tuple[AbstractAction, ...]
    subset: Optional[object] = None
    trace_id: str = ''

    def __len__(self):
        return len(self.actions)

    def lines(self):
        return [str(action) for action in self.actions]


def _to_abstract(action, sut_agent):
    if action.kind == SEND_BELIEF and action.target == sut_agent:
        return AbstractAction(TELL, action.belief.functor)
    if action.kind == EMIT:
        if action.label == TELL and len(action.args) == 1:
            return AbstractAction(TELL, str(action.args[0]))
        if action.label == RECEIVESIGNAL:
            return AbstractAction(RECEIVESIGNAL)
        if action.label == SET_PARAM and len(action.args) == 2:
            return AbstractAction(SET_PARAM, str(action.args[0]), str(action.args[1]))
    return None


def trace_to_abstract(trace, subset=None, trace_id='', stimulus_agents=(HUMAN, META), sut_agent=ROBOT):
    """ Format a model trace into an abstract test.

    Stimuli are the emit actions of the human and meta agents, plus their
    tell-messages addressed to the robot. Plans fired by other agents are skipped.

    :param trace: trace of a seeded run
    :param subset: belief subset that seeded the run (Default: None)
    :param trace_id: identifier of the trace (Default: '')
    :param stimulus_agents: agents whose actions are stimuli (Default: human and meta)
    :param sut_agent: agent standing for the code under test (Default: robot)
    :return: abstract test, in trace order
    :type trace: bditestgen.agents.trace.MasTrace
    :rtype: AbstractTest
    """
    actions = []
    nbrecords = 0
    for record in trace:
        if record.agent not in stimulus_agents:
            continue
        if record.agent == HUMAN:
            nbrecords += 1
        if record.outcome != FIRED:
            continue
        for action in record.actions:
            abstract = _to_abstract(action, sut_agent)
            if abstract is not None:
                actions.append(abstract)
    if nbrecords == 0:
        warnings.warn('Trace '+str(trace_id)+' has no human record; the abstract test is empty.')
    return AbstractTest(tuple(actions), subset, trace_id)


def save_abstract_test(test, filepath):
    """ Write an abstract test, one action per line; provenance goes in `#` header lines. """
    with open(filepath, 'w') as f:
        f.write('# trace: '+test.trace_id+'\n')
        if test.subset is not None:
            f.write('# subset: '+format_subset(test.subset)+'\n')
        for line in test.lines():
            f.write(line+'\n')


def load_abstract_test(filepath):
    """ Read an abstract test written by :func:`save_abstract_test`. """
    actions, subset, trace_id = [], None, ''
    with open(filepath, 'r') as f:
        for line in textfile_generator(f, linebreak=False):
            if line.startswith('# trace:'):
                trace_id = line[len('# trace:'):].strip()
            elif line.startswith('# subset:'):
                subset = parse_subset(line[len('# subset:'):])
            elif len(line) > 0 and not line.startswith('#'):
                actions.append(parse_abstract_action(line))
    return AbstractTest(tuple(actions), subset, trace_id)
