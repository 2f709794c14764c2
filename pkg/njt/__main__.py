import sys

from njt.cli import main

sys.exit(main())
