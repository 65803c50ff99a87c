
import pandas as pd


RESET = 'Reset'
WAITING = 'WaitingForRequest'
GRAB_LEG = 'GrabLeg'
OFFER_LEG = 'OfferLeg'
SENSING = 'Sensing'
RELEASE = 'Release'
DISCARD = 'Discard'
FINISHED = 'Finished'
TIMED_OUT = 'TimedOut'
STATES = (RESET, WAITING, GRAB_LEG, OFFER_LEG, SENSING, RELEASE, DISCARD, FINISHED, TIMED_OUT)

UNEXPECTED_INPUT = 'unexpected-input'

# legs in the re-supply tray and corners of the table
LEG_SLOTS = 4
CHANNELS = ('gaze', 'pressure', 'location')

READING_ARMS = ['branch:'+channel+arm for channel in CHANNELS for arm in ('_ready', '_not_ready')]
# the robot takes the first leg left in the tray; a discarded leg goes back to its slot
GRAB_SLOTS = ['action:grab_slot_%d' % slot for slot in range(1, LEG_SLOTS + 1)]
ATTACH_CORNERS = ['action:attach_corner_%d' % corner for corner in range(1, LEG_SLOTS + 1)]

# labeled statements and branches of the controller: state entries, branch arms, emitted actions
COVERAGE_POINTS = tuple(['enter:'+state for state in STATES] + [
    'branch:reset_done_waiting',
    'branch:reset_done_finished',
    'branch:leg_request',
    'branch:buffer_request',
    'branch:buffered_request',
    'branch:request_timeout_finished',
    'branch:request_timeout_none',
    'branch:human_ready_voice',
    'branch:settle_done',
    'branch:reading_ready',
    'branch:reading_not_ready',
    'branch:sensing_timeout',
    'action:joint_motion',
    'action:hand_close',
    'action:hand_distance_sample',
    'action:hand_open',
    'action:leg_release',
    'action:leg_discard',
    'action:hold_signal',
    'action:read_sensors',
] + READING_ARMS + GRAB_SLOTS + ATTACH_CORNERS + [UNEXPECTED_INPUT])


class CodeCoverageMap:
    """ Hit counts of the fixed inventory of controller coverage points. """
    def __init__(self, points=COVERAGE_POINTS, hits=None):
        self.points = tuple(points)
        self.hits = {point: 0 for point in self.points}
        if hits is not None:
            for point, count in hits.items():
                self._check(point)
                self.hits[point] = int(count)

    def _check(self, point):
        if point not in self.hits:
            raise ValueError('Unknown coverage point: '+point)

    def hit(self, point):
        self._check(point)
        self.hits[point] += 1

    def covered(self):
        return [point for point in self.points if self.hits[point] > 0]

    def percentage(self):
        return 100.0 * len(self.covered()) / len(self.points)

    def merge(self, other):
        """ Pointwise maximum of two maps over the same inventory. """
        if self.points != other.points:
            raise ValueError('Coverage maps of different inventories')
        return CodeCoverageMap(self.points, {p: max(self.hits[p], other.hits[p]) for p in self.points})

    def __eq__(self, other):
        return isinstance(other, CodeCoverageMap) and self.points == other.points and self.hits == other.hits

    def __repr__(self):
        return '<CodeCoverageMap %.1f%% of %d points>' % (self.percentage(), len(self.points))

    def to_dataframe(self):
        return pd.DataFrame({'point': list(self.points), 'hits': [self.hits[p] for p in self.points]})

    def to_csv(self, filepath):
        self.to_dataframe().to_csv(filepath, index=False)


def load_coverage_map(filepath):
    df = pd.read_csv(filepath, dtype={'point': str})
    return CodeCoverageMap(tuple(df['point']), dict(zip(df['point'], df['hits'])))
