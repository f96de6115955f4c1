import sys

from puremono.cli import main

sys.exit(main())
