from .errors import *
from .global_v import *
