from .trace import *
from .series import *
