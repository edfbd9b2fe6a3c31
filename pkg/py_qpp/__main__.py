import sys

from py_qpp.cli import main

sys.exit(main())
