from .basis import *
from .elements import *
from .monoids import *
from .families import *
from .dual import *
from .operations import *
