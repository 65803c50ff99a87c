
import logging
from dataclasses import dataclass
from typing import Optional

from .coverage import CodeCoverageMap, UNEXPECTED_INPUT, LEG_SLOTS, CHANNELS
from .coverage import RESET, WAITING, GRAB_LEG, OFFER_LEG, SENSING, RELEASE, DISCARD, FINISHED, TIMED_OUT
from .eventlog import SimEventLog, STATE, JOINT_SPEED, HAND_CLOSE, HAND_DISTANCE, HAND_OPEN
from .eventlog import LEG_RELEASE, LEG_DISCARD, HOLD_SIGNAL, SENSOR_READING
from .faults import FaultConfig, ControllerConfig
from .sensors import HumanPosture, sensor_read
from ..scenario.vocabulary import SensorTriple


logger = logging.getLogger(__name__)

CONTROLLER = 'controller'
HUMAN = 'human'

# input kinds
VOICE_INPUT = 'voice'
TIMER = 'timer'

LEG_COMMAND = 'leg'
READY_COMMAND = 'humanReady'

TERMINAL_STATES = (FINISHED, TIMED_OUT)
HOLDING_STATES = (GRAB_LEG, OFFER_LEG, SENSING, RELEASE)


@dataclass
class ControllerState:
    state: str = RESET
    legs_handled: int = 0
    released: int = 0
    discarded: int = 0
    requests: int = 0
    pending_requests: int = 0
    holding_leg: bool = False
    settling: bool = False
    epoch: int = 0
    last_reading: Optional[SensorTriple] = None

    @property
    def terminal(self):
        return self.state in TERMINAL_STATES

    @property
    def legs_in_resupply(self):
        """ Requested legs neither released nor discarded. """
        return self.pending_requests + int(self.holding_leg)


class RobotController:
    """ Handover controller of the robot, instrumented with code coverage points.

    Timers go through the clock as events addressed to the controller and carry
    the epoch of the state that set them; a timer from an earlier state is dropped.
    """
    def __init__(self, clock, rng, eventlog=None, coverage=None, faults=None, config=None,
                 posture_source=None):
        """

        :param clock: simulation clock
        :param rng: random generator for latencies, sensor errors and motion samples
        :param eventlog: event log (Default: a new one)
        :param coverage: coverage map (Default: a new one)
        :param faults: fault configuration (Default: FaultConfig())
        :param config: controller configuration (Default: ControllerConfig())
        :param posture_source: callable returning the current HumanPosture (Default: no human)
        """
        self.clock = clock
        self.rng = rng
        self.eventlog = SimEventLog() if eventlog is None else eventlog
        self.coverage = CodeCoverageMap() if coverage is None else coverage
        self.faults = FaultConfig() if faults is None else faults
        self.config = ControllerConfig() if config is None else config
        self.posture_source = (lambda: HumanPosture()) if posture_source is None else posture_source
        self.state = ControllerState()

    def start(self):
        self._enter(RESET)

    # helpers

    def _set_timer(self, delay, name):
        self.clock.schedule_in(delay, CONTROLLER, TIMER, {'name': name, 'epoch': self.state.epoch})

    def _log(self, channel, **payload):
        return self.eventlog.log(self.clock.now, channel, **payload)

    def _move_joints(self):
        self.coverage.hit('action:joint_motion')
        cap = self.config.speed_cap
        for _ in range(self.config.speed_samples):
            if self.rng.random() < self.faults.overspeed_rate:
                speed = self.rng.uniform(1.1 * cap, 1.5 * cap)
            else:
                speed = self.rng.uniform(0.5 * cap, cap)
            self._log(JOINT_SPEED, speed=float(speed))

    def _close_hand(self):
        posture = self.posture_source()
        if posture.hand_distance is not None:
            self.coverage.hit('action:hand_distance_sample')
            if self.rng.random() < self.faults.proximity_hazard:
                distance = self.rng.uniform(*self.faults.too_close_distance)
            else:
                distance = posture.hand_distance
            self._log(HAND_DISTANCE, distance=float(distance))
        self.coverage.hit('action:hand_close')
        self._log(HAND_CLOSE)

    def _enter(self, state):
        self.state.state = state
        self.state.epoch += 1
        self.state.settling = False
        self.coverage.hit('enter:'+state)
        self._log(STATE, state=state)
        logger.debug('%.2f controller enters %s', self.clock.now, state)

        if state == RESET:
            self._move_joints()
            self._set_timer(self.config.reset_time, 'reset_done')
        elif state == WAITING:
            if self.state.pending_requests > 0:
                self.coverage.hit('branch:buffered_request')
                self.state.pending_requests -= 1
                self._enter(GRAB_LEG)
            else:
                self._set_timer(self.config.request_wait, 'request_timeout')
        elif state == GRAB_LEG:
            self.state.holding_leg = True
            self.coverage.hit('action:grab_slot_%d' % min(self.state.released + 1, LEG_SLOTS))
            self._move_joints()
            self._set_timer(self.config.motion_time, 'grab_done')
        elif state == OFFER_LEG:
            self._move_joints()
            self._set_timer(self.config.motion_time, 'offer_done')
        elif state == SENSING:
            self._set_timer(self.config.sensing_window, 'sensing_timeout')
        elif state == RELEASE:
            latency = self.rng.uniform(*self.faults.release_latency)
            self._set_timer(latency, 'hand_open')
        elif state == DISCARD:
            self.coverage.hit('action:leg_discard')
            self._log(LEG_DISCARD)
            self.state.holding_leg = False
            self.state.discarded += 1
            self.state.legs_handled += 1
            self._set_timer(self.config.motion_time, 'discard_done')

    # inputs

    def _on_voice(self, text):
        if text == LEG_COMMAND:
            self.state.requests += 1
            if self.state.state == WAITING:
                self.coverage.hit('branch:leg_request')
                self._enter(GRAB_LEG)
            else:
                self.coverage.hit('branch:buffer_request')
                self.state.pending_requests += 1
        elif text == READY_COMMAND and self.state.state == SENSING and not self.state.settling:
            self.coverage.hit('branch:human_ready_voice')
            self.state.settling = True
            self._set_timer(self.config.settle_time, 'settle_done')
        else:
            self.coverage.hit(UNEXPECTED_INPUT)

    def _read_sensors(self):
        self.coverage.hit('action:read_sensors')
        reading = sensor_read(self.posture_source().true_triple(), self.faults, self.rng)
        self.state.last_reading = reading
        self._log(SENSOR_READING, g=reading.g, p=reading.p, l=reading.l)
        for channel, value in zip(CHANNELS, reading.as_tuple()):
            self.coverage.hit('branch:'+channel+('_ready' if value else '_not_ready'))
        return reading

    def _on_timer(self, name):
        state = self.state.state
        if name == 'reset_done':
            if self.state.legs_handled >= self.config.max_legs:
                self.coverage.hit('branch:reset_done_finished')
                self._enter(FINISHED)
            else:
                self.coverage.hit('branch:reset_done_waiting')
                self._enter(WAITING)
        elif name == 'request_timeout':
            if self.state.legs_handled > 0:
                self.coverage.hit('branch:request_timeout_finished')
                self._enter(FINISHED)
            else:
                self.coverage.hit('branch:request_timeout_none')
                self._enter(TIMED_OUT)
        elif name == 'grab_done':
            self._close_hand()
            self._enter(OFFER_LEG)
        elif name == 'offer_done':
            self.coverage.hit('action:hold_signal')
            self._log(HOLD_SIGNAL)
            self.clock.schedule_in(0.0, HUMAN, HOLD_SIGNAL)
            self._enter(SENSING)
        elif name == 'settle_done':
            self.coverage.hit('branch:settle_done')
            if self._read_sensors().ready:
                self.coverage.hit('branch:reading_ready')
                self._enter(RELEASE)
            else:
                self.coverage.hit('branch:reading_not_ready')
                self._enter(DISCARD)
        elif name == 'sensing_timeout':
            self.coverage.hit('branch:sensing_timeout')
            self._enter(DISCARD)
        elif name == 'hand_open':
            self.coverage.hit('action:hand_open')
            self._log(HAND_OPEN)
            self._set_timer(self.config.release_gap, 'leg_release')
        elif name == 'leg_release':
            self.coverage.hit('action:leg_release')
            self._log(LEG_RELEASE)
            self.state.holding_leg = False
            self.state.released += 1
            self.coverage.hit('action:attach_corner_%d' % min(self.state.released, LEG_SLOTS))
            self.state.legs_handled += 1
            self._close_hand()
            self._enter(RESET)
        elif name == 'discard_done':
            self._enter(RESET)
        else:
            logger.warning('Unknown timer %s in state %s', name, state)

    def step(self, event):
        """ Apply one input event: a voice command or a timer.

        :param event: clock event addressed to the controller
        :return: log records emitted by the transition
        :type event: bditestgen.sim.clock.ScheduledEvent
        :rtype: list
        """
        start = len(self.eventlog)
        if event.kind == TIMER:
            if not self.state.terminal and event.payload['epoch'] == self.state.epoch:
                self._on_timer(event.payload['name'])
        elif event.kind == VOICE_INPUT and not self.state.terminal:
            self._on_voice(event.payload['text'])
        else:
            self.coverage.hit(UNEXPECTED_INPUT)
        return self.eventlog.records[start:]


def controller_step(controller, event):
    """ One FSM transition of `controller` on `event`.

    :return: (controller state after the transition, emitted log records)
    :rtype: tuple
    """
    emitted = controller.step(event)
    return controller.state, emitted
