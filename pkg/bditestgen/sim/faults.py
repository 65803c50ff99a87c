
import logging
from dataclasses import dataclass, asdict, fields

from ..utils.misc import read_keyvalue_file, parse_interval


logger = logging.getLogger(__name__)


def _check_interval(name, interval):
    low, high = interval
    if low > high or low < 0:
        raise ValueError(name+' must be an interval of non-negative numbers: '+str(interval))


def _from_entries(cls, entries, filepath):
    known = {f.name: f for f in fields(cls)}
    kwargs = {}
    for key, value in entries.items():
        if key not in known:
            raise ValueError('Unknown key '+key+' in '+filepath)
        default = getattr(cls, key)
        if isinstance(default, tuple):
            kwargs[key] = parse_interval(value)
        elif isinstance(default, int):
            kwargs[key] = int(value)
        else:
            kwargs[key] = float(value)
    return cls(**kwargs)


@dataclass(frozen=True)
class FaultConfig:
    """ Error injection of the simulated testbench.

    Intervals are in simulated seconds or metres, rates are probabilities.
    """
    release_latency: tuple = (1.0, 12.0)
    gaze_error: float = 0.05
    pressure_error: float = 0.05
    location_error: float = 0.05
    proximity_hazard: float = 0.1
    too_close_distance: tuple = (0.02, 0.09)
    overspeed_rate: float = 0.0

    def __post_init__(self):
        for name in ('gaze_error', 'pressure_error', 'location_error', 'proximity_hazard', 'overspeed_rate'):
            rate = getattr(self, name)
            if not 0.0 <= rate <= 1.0:
                raise ValueError(name+' must be a probability: '+str(rate))
        _check_interval('release_latency', self.release_latency)
        _check_interval('too_close_distance', self.too_close_distance)

    @property
    def channel_errors(self):
        return self.gaze_error, self.pressure_error, self.location_error

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_file(cls, filepath):
        """ Read a key-value fault file; intervals are written `low, high`.

        :param filepath: path of the fault file
        :return: fault configuration, defaults for absent keys
        :type filepath: str
        :rtype: FaultConfig
        """
        config = _from_entries(cls, read_keyvalue_file(filepath), filepath)
        logger.info('Fault configuration from %s: %s', filepath, config)
        return config


NO_FAULTS = FaultConfig(release_latency=(1.0, 1.0), gaze_error=0.0, pressure_error=0.0,
                        location_error=0.0, proximity_hazard=0.0, overspeed_rate=0.0)


@dataclass(frozen=True)
class ControllerConfig:
    """ Timing and motion parameters of the robot controller, in simulated seconds and rad/s. """
    speed_cap: float = 0.24
    reset_time: float = 20.0
    request_wait: float = 60.0
    sensing_window: float = 40.0
    settle_time: float = 7.0
    motion_time: float = 4.0
    release_gap: float = 0.5
    max_legs: int = 4
    speed_samples: int = 3

    def __post_init__(self):
        if self.speed_cap <= 0:
            raise ValueError('speed_cap must be positive')
        if self.max_legs < 1:
            raise ValueError('max_legs must be at least 1')

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_file(cls, filepath):
        return _from_entries(cls, read_keyvalue_file(filepath), filepath)
