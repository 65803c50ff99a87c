
import heapq
from dataclasses import dataclass, field

from ..utils.exceptions import ScheduleInPastException


@dataclass(order=True)
class ScheduledEvent:
    """ Event waiting in the clock queue. Ordered by time, then by insertion. """
    time: float
    seq: int
    target: str = field(compare=False)
    kind: str = field(compare=False)
    payload: dict = field(compare=False, default_factory=dict)


class SimClock:
    """ Discrete-event clock in simulated seconds. """
    def __init__(self):
        self.now = 0.0
        self._queue = []
        self._seq = 0

    def schedule(self, time, target, kind, payload=None):
        """ Queue an event at an absolute time.

        :param time: simulated time
        :param target: receiver of the event
        :param kind: event kind
        :param payload: event data (Default: None)
        :return: queued event
        :raise: ScheduleInPastException
        :type time: float
        :type target: str
        :type kind: str
        :type payload: dict
        :rtype: ScheduledEvent
        """
        if time < self.now:
            raise ScheduleInPastException(time, self.now)
        event = ScheduledEvent(float(time), self._seq, target, kind, {} if payload is None else dict(payload))
        self._seq += 1
        heapq.heappush(self._queue, event)
        return event

    def schedule_in(self, delay, target, kind, payload=None):
        return self.schedule(self.now + delay, target, kind, payload)

    def peek_time(self):
        return self._queue[0].time if len(self._queue) > 0 else None

    def pop(self):
        event = heapq.heappop(self._queue)
        self.now = event.time
        return event

    def empty(self):
        return len(self._queue) == 0

    def __len__(self):
        return len(self._queue)
