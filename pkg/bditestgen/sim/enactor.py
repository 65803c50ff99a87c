
import logging

from .eventlog import SimEventLog, VOICE, HOLD_SIGNAL
from .sensors import HumanPosture
from ..testgen.concrete import WAIT, VOICE as VOICE_CHANNEL


logger = logging.getLogger(__name__)

HUMAN = 'human'
CONTROLLER = 'controller'

STIMULUS_START = 'stimulus_start'
STIMULUS_END = 'stimulus_end'
WAIT_CAP = 'wait_cap'


def voice_text(stimulus):
    """ Spoken word of a voice stimulus, e.g. `leg` for `tell leg`. """
    return stimulus.action.split()[-1]


def play(test, hold_times=(), start=0.0):
    """ Timeline of a concrete test when the robot signals at `hold_times`.

    A wait ends at the first unconsumed hold signal, including one received
    before the wait began, or after its duration.

    :param test: concrete test
    :param hold_times: times of the robot hold signals (Default: none)
    :param start: start time (Default: 0.0)
    :return: list of (start, end, stimulus)
    :type test: bditestgen.testgen.concrete.ConcreteTest
    :rtype: list
    """
    hold_times = sorted(hold_times)
    consumed = 0
    now = start
    timeline = []
    for stimulus in test.stimuli:
        end = now + stimulus.duration
        if stimulus.channel == WAIT:
            if consumed < len(hold_times) and hold_times[consumed] <= end:
                end = max(now, hold_times[consumed])
                consumed += 1
        timeline.append((now, end, stimulus))
        now = end
    return timeline


class HumanEnactor:
    """ Plays a concrete test as the simulated human, one stimulus after the other.

    Every stimulus takes effect when it completes: a gesture once the hand or
    head is in place, a voice command once the utterance ends.
    """
    def __init__(self, test, clock, eventlog=None):
        self.test = test
        self.clock = clock
        self.eventlog = SimEventLog() if eventlog is None else eventlog
        self.posture = HumanPosture()
        self.pending_holds = 0
        self.waiting = None
        self.done = len(test.stimuli) == 0

    def start(self):
        if not self.done:
            self.clock.schedule_in(0.0, HUMAN, STIMULUS_START, {'index': 0})

    def _finish(self, index):
        self.waiting = None
        self.clock.schedule_in(0.0, HUMAN, STIMULUS_END, {'index': index})

    def _on_start(self, index):
        stimulus = self.test.stimuli[index]
        if stimulus.channel == WAIT:
            if self.pending_holds > 0:
                self.pending_holds -= 1
                self._finish(index)
            else:
                self.waiting = index
                self.clock.schedule_in(stimulus.duration, HUMAN, WAIT_CAP, {'index': index})
            return
        self.clock.schedule_in(stimulus.duration, HUMAN, STIMULUS_END, {'index': index})

    def _on_end(self, index):
        stimulus = self.test.stimuli[index]
        if stimulus.channel == VOICE_CHANNEL:
            text = voice_text(stimulus)
            self.eventlog.log(self.clock.now, VOICE, text=text)
            self.clock.schedule_in(0.0, CONTROLLER, 'voice', {'text': text})
        elif stimulus.channel != WAIT:
            self.posture = self.posture.with_stimulus(stimulus.channel, stimulus.parameters)
            self.eventlog.log(self.clock.now, stimulus.channel, **stimulus.parameters)
        if index + 1 < len(self.test.stimuli):
            self.clock.schedule_in(0.0, HUMAN, STIMULUS_START, {'index': index + 1})
        else:
            self.done = True

    def handle(self, event):
        if event.kind == STIMULUS_START:
            self._on_start(event.payload['index'])
        elif event.kind == STIMULUS_END:
            self._on_end(event.payload['index'])
        elif event.kind == WAIT_CAP:
            if self.waiting == event.payload['index']:
                self._finish(event.payload['index'])
        elif event.kind == HOLD_SIGNAL:
            if self.waiting is not None:
                self._finish(self.waiting)
            else:
                self.pending_holds += 1
        else:
            logger.warning('Enactor ignores event %s', event.kind)


def enact(test, clock, eventlog=None):
    """ Schedule the first stimulus of `test` on `clock` and return the running enactor.

    :param test: concrete test
    :param clock: simulation clock
    :param eventlog: event log receiving the human stimuli (Default: a new one)
    :return: enactor; feed it the clock events addressed to the human
    :type test: bditestgen.testgen.concrete.ConcreteTest
    :type clock: bditestgen.sim.clock.SimClock
    :rtype: HumanEnactor
    """
    enactor = HumanEnactor(test, clock, eventlog)
    enactor.start()
    return enactor
