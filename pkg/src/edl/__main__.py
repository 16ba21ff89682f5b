import sys

from edl.cli import main

sys.exit(main())
