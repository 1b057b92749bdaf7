import sys

from f1hall.cli import main

sys.exit(main())
