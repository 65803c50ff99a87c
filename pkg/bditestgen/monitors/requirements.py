
import logging

from .outcome import judge, R1, R2, R3, R4
from ..sim.coverage import RESET
from ..sim.eventlog import SENSOR_READING, LEG_RELEASE, LEG_DISCARD, STATE, HAND_CLOSE, HAND_DISTANCE, JOINT_SPEED


logger = logging.getLogger(__name__)

DEFAULT_RELEASE_THRESHOLD = 10.0
DEFAULT_SAFE_DISTANCE = 0.1
DEFAULT_SPEED_LIMIT = 0.25
DISTANCE_WINDOW = 1.0


def _ready(record):
    return record.payload['g'] == 1 and record.payload['p'] == 1 and record.payload['l'] == 1


def monitor_r1(eventlog, threshold=DEFAULT_RELEASE_THRESHOLD):
    """ If the human is sensed ready, a leg is released within `threshold` seconds.

    :param eventlog: event log of a simulation
    :param threshold: release deadline in simulated seconds (Default: 10)
    :return: outcome of R1
    :type eventlog: bditestgen.sim.eventlog.SimEventLog
    :type threshold: float
    :rtype: AssertionOutcome
    """
    if threshold <= 0:
        raise ValueError('threshold must be positive')
    triggers = [r.time for r in eventlog.of_channel(SENSOR_READING) if _ready(r)]
    releases = [r.time for r in eventlog.of_channel(LEG_RELEASE)]
    violations = [t for t in triggers if not any(t <= release <= t + threshold for release in releases)]
    return judge(R1, len(triggers), violations)


def monitor_r2(eventlog):
    """ If the human is sensed not ready, no leg is released before the next discard or reset.

    :param eventlog: event log of a simulation
    :return: outcome of R2
    :type eventlog: bditestgen.sim.eventlog.SimEventLog
    :rtype: AssertionOutcome
    """
    triggers = 0
    armed_at = None
    violations = []
    for record in eventlog:
        if record.channel == SENSOR_READING and not _ready(record):
            triggers += 1
            if armed_at is None:
                armed_at = record.time
        elif record.channel == LEG_RELEASE and armed_at is not None:
            violations.append(armed_at)
            armed_at = None
        elif record.channel == LEG_DISCARD or (record.channel == STATE and record.payload['state'] == RESET):
            armed_at = None
    return judge(R2, triggers, violations)


def monitor_r3(eventlog, safe_distance=DEFAULT_SAFE_DISTANCE, window=DISTANCE_WINDOW):
    """ The robot does not close its hand when the human hand is within `safe_distance`.

    Each hand-close is checked against the nearest distance sample at most
    `window` seconds away. Closes without such a sample are not checked; the
    diagnostic tells them apart from runs without any hand-close.

    :param eventlog: event log of a simulation
    :param safe_distance: minimal distance in metres (Default: 0.1)
    :param window: time tolerance of the distance sample in seconds (Default: 1)
    :return: outcome of R3
    :type eventlog: bditestgen.sim.eventlog.SimEventLog
    :type safe_distance: float
    :type window: float
    :rtype: AssertionOutcome
    """
    if safe_distance <= 0:
        raise ValueError('safe_distance must be positive')
    closes = [r.time for r in eventlog.of_channel(HAND_CLOSE)]
    samples = [(r.time, r.payload['distance']) for r in eventlog.of_channel(HAND_DISTANCE)]

    triggers, unsampled = 0, 0
    violations = []
    for t in closes:
        nearby = [(abs(st - t), st, d) for st, d in samples if abs(st - t) <= window]
        if len(nearby) == 0:
            unsampled += 1
            continue
        triggers += 1
        _, _, distance = min(nearby)
        if distance < safe_distance:
            violations.append(t)

    if len(closes) == 0:
        diagnostic = 'no hand-close'
    elif unsampled > 0:
        diagnostic = 'missing distance samples at '+str(unsampled)+' of '+str(len(closes))+' hand-closes'
    else:
        diagnostic = ''
    return judge(R3, triggers, violations, diagnostic)


def monitor_r4(eventlog, limit=DEFAULT_SPEED_LIMIT):
    """ Joint speeds stay below `limit` rad/s.

    :param eventlog: event log of a simulation
    :param limit: speed limit (Default: 0.25)
    :return: outcome of R4
    :type eventlog: bditestgen.sim.eventlog.SimEventLog
    :rtype: AssertionOutcome
    """
    samples = eventlog.of_channel(JOINT_SPEED)
    violations = [r.time for r in samples if r.payload['speed'] >= limit]
    return judge(R4, len(samples), violations)


def check_requirements(eventlog, release_threshold=DEFAULT_RELEASE_THRESHOLD, safe_distance=DEFAULT_SAFE_DISTANCE):
    """ Run the four monitors over one log.

    :return: requirement -> outcome
    :rtype: dict
    """
    return {R1: monitor_r1(eventlog, release_threshold),
            R2: monitor_r2(eventlog),
            R3: monitor_r3(eventlog, safe_distance),
            R4: monitor_r4(eventlog)}
