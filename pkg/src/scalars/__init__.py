from .rings import *
from .parsing import *
from .regularity import *
from .linalg import *
