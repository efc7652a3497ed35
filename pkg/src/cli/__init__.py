from .instances import *
from .suites import *
from .commands import *
