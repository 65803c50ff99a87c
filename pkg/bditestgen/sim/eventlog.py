
import json
from dataclasses import dataclass, field
from typing import List

import pandas as pd


VOICE = 'voice'
GAZE = 'gaze'
PRESSURE = 'pressure'
LOCATION = 'location'
SENSOR_READING = 'sensor_reading'
HAND_OPEN = 'hand_open'
HAND_CLOSE = 'hand_close'
HAND_DISTANCE = 'hand_distance'
LEG_RELEASE = 'leg_release'
LEG_DISCARD = 'leg_discard'
JOINT_SPEED = 'joint_speed'
HOLD_SIGNAL = 'hold_signal'
STATE = 'state'

LOG_COLUMNS = ['time', 'channel', 'payload']


@dataclass(frozen=True)
class SimEvent:
    time: float
    channel: str
    payload: dict = field(default_factory=dict)


@dataclass
class SimEventLog:
    """ Time-ordered observations of one simulation, consumed by the monitors.

    `timed_out` flags a run stopped by the simulated-time cap.
    """
    records: List[SimEvent] = field(default_factory=list)
    timed_out: bool = False

    def log(self, time, channel, **payload):
        if len(self.records) > 0 and time < self.records[-1].time:
            raise ValueError('Event log times must be non-decreasing')
        event = SimEvent(float(time), channel, payload)
        self.records.append(event)
        return event

    def of_channel(self, *channels):
        return [r for r in self.records if r.channel in channels]

    def count(self, channel):
        return len(self.of_channel(channel))

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def to_dataframe(self):
        return pd.DataFrame([[r.time, r.channel, json.dumps(r.payload, sort_keys=True)] for r in self.records],
                            columns=LOG_COLUMNS)

    def to_csv(self, filepath):
        """ Write the log as CSV; the timeout flag goes in a last `timeout` row. """
        df = self.to_dataframe()
        if self.timed_out:
            last = self.records[-1].time if len(self.records) > 0 else 0.0
            df = pd.concat([df, pd.DataFrame([[last, 'timeout', '{}']], columns=LOG_COLUMNS)],
                           ignore_index=True)
        df.to_csv(filepath, index=False)


def load_event_log(filepath):
    df = pd.read_csv(filepath, dtype={'channel': str, 'payload': str})
    eventlog = SimEventLog()
    for row in df.itertuples(index=False):
        if row.channel == 'timeout':
            eventlog.timed_out = True
            continue
        eventlog.records.append(SimEvent(float(row.time), row.channel, json.loads(row.payload)))
    return eventlog
