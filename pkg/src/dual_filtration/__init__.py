from .functionals import *
from .characters import *
