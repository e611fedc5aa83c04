import sys

from paritygames.cli import main

sys.exit(main())
