import sys

from nupart.cli import main

sys.exit(main())
