import sys

from latindef.cli import main

sys.exit(main())
