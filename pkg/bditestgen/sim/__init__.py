
from . import clock
from . import faults
from . import sensors
from . import eventlog
from . import coverage
from . import controller
from . import enactor
from . import driver

from .clock import SimClock, ScheduledEvent
from .faults import FaultConfig, ControllerConfig, NO_FAULTS
from .sensors import HumanPosture, sensor_read
from .eventlog import SimEvent, SimEventLog, load_event_log
from .coverage import CodeCoverageMap, COVERAGE_POINTS, load_coverage_map
from .controller import RobotController, ControllerState, controller_step
from .enactor import HumanEnactor, enact, play
from .driver import run_simulation, DEFAULT_WALL_LIMIT
