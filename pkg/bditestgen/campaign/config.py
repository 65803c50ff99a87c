
import os
import logging
from dataclasses import dataclass, asdict, fields
from typing import Optional

from ..monitors.requirements import DEFAULT_RELEASE_THRESHOLD, DEFAULT_SAFE_DISTANCE
from ..sim.driver import DEFAULT_WALL_LIMIT
from ..utils.misc import read_keyvalue_file


logger = logging.getLogger(__name__)

MANUAL = 'manual'
RANDOM = 'random'
RL = 'rl'
BASELINE = 'unconstrained-pseudorandom-baseline'
STRATEGIES = (MANUAL, RANDOM, RL, BASELINE)

PATH_FIELDS = ('manual_path', 'ranges_path', 'faults_path', 'learning_path', 'model_path')


@dataclass(frozen=True)
class CampaignConfig:
    """ Settings of one test campaign.

    `suite_size` is the number of concrete tests. Each abstract test is
    concretized `concretizations` times, or more when the strategy yields too
    few abstract tests to fill the suite.
    Without `manual_path` the manual strategy reads the bundled hand-picked subsets.
    """
    strategy: str = RL
    suite_size: int = 100
    seed: int = 0
    concretizations: int = 1
    output_dir: str = 'campaign'
    manual_path: Optional[str] = None
    ranges_path: Optional[str] = None
    faults_path: Optional[str] = None
    learning_path: Optional[str] = None
    model_path: Optional[str] = None
    n_jobs: int = 1
    wall_limit: float = DEFAULT_WALL_LIMIT
    release_threshold: float = DEFAULT_RELEASE_THRESHOLD
    safe_distance: float = DEFAULT_SAFE_DISTANCE

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError('Unknown strategy '+str(self.strategy)+'; choose from '+', '.join(STRATEGIES))
        if self.suite_size < 1:
            raise ValueError('suite_size must be at least 1')
        if self.concretizations < 1:
            raise ValueError('concretizations must be at least 1')
        if self.wall_limit <= 0:
            raise ValueError('wall_limit must be positive')
        for name in PATH_FIELDS:
            path = getattr(self, name)
            if path is not None and not os.path.exists(path):
                raise ValueError(name+' does not exist: '+path)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, entries):
        kwargs = {}
        known = {f.name for f in fields(cls)}
        for key, value in entries.items():
            if key not in known:
                raise ValueError('Unknown campaign setting: '+key)
            if value is None:
                continue
            default = getattr(cls, key)
            if key in PATH_FIELDS or isinstance(default, str):
                kwargs[key] = str(value)
            elif isinstance(default, int):
                kwargs[key] = int(value)
            else:
                kwargs[key] = float(value)
        return cls(**kwargs)

    @classmethod
    def from_file(cls, filepath):
        """ Read a key-value campaign file; missing keys keep their defaults. """
        return cls.from_dict(read_keyvalue_file(filepath))
