from .reports import *
from .symmetric import *
from .relations import *
from .unipotent import *
