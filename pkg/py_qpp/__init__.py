from py_qpp.model import *
from py_qpp.series import *
from py_qpp.qtoolkit import *
from py_qpp.combinatorics import *
from py_qpp.chebyshev import *
from py_qpp.identity import *
from py_qpp.identity.registry import *
import py_qpp.log
