from .rules import *
from .sequences import *
from .unipotence import *
