import sys

from permcheb.main import main

sys.exit(main())
